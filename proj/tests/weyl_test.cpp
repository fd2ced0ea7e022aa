#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "repvar/rng.hpp"
#include "repvar/weyl.hpp"

using namespace repvar;

namespace {

/// Every valid simple type of rank <= 8.
std::vector<std::pair<SimpleType, int>> all_types_rank_le_8() {
  std::vector<std::pair<SimpleType, int>> out;
  for (int r = 1; r <= 8; ++r) out.emplace_back(SimpleType::A, r);
  for (int r = 2; r <= 8; ++r) out.emplace_back(SimpleType::B, r);
  for (int r = 2; r <= 8; ++r) out.emplace_back(SimpleType::C, r);
  for (int r = 3; r <= 8; ++r) out.emplace_back(SimpleType::D, r);
  for (int r = 6; r <= 8; ++r) out.emplace_back(SimpleType::E, r);
  out.emplace_back(SimpleType::F, 4);
  out.emplace_back(SimpleType::G, 2);
  return out;
}

/// Closed-form cross-check derived from the classification: w0 != -1
/// exactly for A_{l>=2}, D_odd and E6.
bool table_minus_one(SimpleType t, int rank) {
  switch (t) {
    case SimpleType::A: return rank == 1;
    case SimpleType::D: return rank % 2 == 0;
    case SimpleType::E: return rank != 6;
    default: return true;
  }
}

long long expected_positive_roots(SimpleType t, int rank) {
  switch (t) {
    case SimpleType::A: return static_cast<long long>(rank) * (rank + 1) / 2;
    case SimpleType::B:
    case SimpleType::C: return static_cast<long long>(rank) * rank;
    case SimpleType::D: return static_cast<long long>(rank) * (rank - 1);
    case SimpleType::E: return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case SimpleType::F: return 24;
    case SimpleType::G: return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("rank validity per type") {
  CHECK_THROWS_AS(make_root_system(SimpleType::B, 1), error);
  CHECK_THROWS_AS(make_root_system(SimpleType::C, 1), error);
  CHECK_THROWS_AS(make_root_system(SimpleType::D, 2), error);
  CHECK_THROWS_AS(make_root_system(SimpleType::E, 5), error);
  CHECK_THROWS_AS(make_root_system(SimpleType::E, 9), error);
  CHECK_THROWS_AS(make_root_system(SimpleType::F, 3), error);
  CHECK_THROWS_AS(make_root_system(SimpleType::G, 3), error);
  CHECK_NOTHROW(make_root_system(SimpleType::A, 1));
}

TEST_CASE("cartan matrices match the realizations") {
  const auto g2 = make_root_system(SimpleType::G, 2);
  CHECK(g2.cartan == std::vector<std::vector<long long>>{{2, -1}, {-3, 2}});
  const auto b2 = make_root_system(SimpleType::B, 2);
  CHECK(b2.cartan == std::vector<std::vector<long long>>{{2, -2}, {-1, 2}});
  const auto a2 = make_root_system(SimpleType::A, 2);
  CHECK(a2.cartan == std::vector<std::vector<long long>>{{2, -1}, {-1, 2}});
}

TEST_CASE("small longest elements") {
  const auto a1 = longest_element(make_root_system(SimpleType::A, 1));
  CHECK(a1.word.size() == 1);
  CHECK(minus_one_in_weyl(make_root_system(SimpleType::A, 1)));

  const auto a2rs = make_root_system(SimpleType::A, 2);
  const auto a2 = longest_element(a2rs);
  CHECK(a2.word.size() == 3);
  CHECK_FALSE(minus_one_in_weyl(a2rs));  // w0 induces the diagram flip
  // the flip: w0(alpha_1) = -alpha_2
  const auto img = apply_matrix(a2.matrix, a2rs.simple_roots[0]);
  for (std::size_t k = 0; k < img.size(); ++k) CHECK(img[k] == -a2rs.simple_roots[1][k]);

  const auto b2rs = make_root_system(SimpleType::B, 2);
  CHECK(longest_element(b2rs).word.size() == 4);
  CHECK(minus_one_in_weyl(b2rs));
}

TEST_CASE("w0 properties across all types of rank <= 8") {
  for (const auto& [type, rank] : all_types_rank_le_8()) {
    const RootSystem rs = make_root_system(type, rank);
    const auto positive = positive_roots_in_root_coords(rs);
    CHECK(static_cast<long long>(positive.size()) == expected_positive_roots(type, rank));
    const WeylElement w0 = longest_element(rs);
    CHECK(w0.word.size() == positive.size());

    // involution and orthogonality
    const auto id = Matrix<Rat>::identity(rs.ambient, Rat(1));
    CHECK(w0.matrix * w0.matrix == id);
    CHECK(w0.matrix.transpose() * w0.matrix == id);

    // w0 maps the positive roots bijectively onto the negative roots
    std::set<std::vector<Rat>> negatives;
    for (const auto& v : positive) {
      auto amb = root_coords_to_ambient(rs, v);
      for (auto& c : amb) c = -c;
      negatives.insert(std::move(amb));
    }
    std::set<std::vector<Rat>> images;
    for (const auto& v : positive)
      images.insert(apply_matrix(w0.matrix, root_coords_to_ambient(rs, v)));
    CHECK(images == negatives);

    // the matrix really is the product of the listed reflections
    auto m = Matrix<Rat>::identity(rs.ambient, Rat(1));
    for (int i : w0.word)
      m = m * reflection_matrix(rs, rs.simple_roots[static_cast<std::size_t>(i - 1)]);
    CHECK(m == w0.matrix);
  }
}

TEST_CASE("minus_one agrees with the classification table") {
  for (const auto& [type, rank] : all_types_rank_le_8())
    CHECK(minus_one_in_weyl(make_root_system(type, rank)) == table_minus_one(type, rank));
}

TEST_CASE("D3 behaves like A3") {
  CHECK_FALSE(minus_one_in_weyl(make_root_system(SimpleType::D, 3)));
  CHECK(positive_roots_in_root_coords(make_root_system(SimpleType::D, 3)).size() ==
        positive_roots_in_root_coords(make_root_system(SimpleType::A, 3)).size());
}

TEST_CASE("classifier") {
  CHECK_FALSE(classify_faithful_n1({{SimpleType::A, 1}}));
  CHECK(classify_faithful_n1({{SimpleType::A, 2}}));
  CHECK_FALSE(classify_faithful_n1({{SimpleType::C, 3}, {SimpleType::E, 7}}));
  CHECK(classify_faithful_n1({{SimpleType::B, 4}, {SimpleType::D, 5}}));
  CHECK_THROWS_AS(classify_faithful_n1({}), error);
  for (const auto& [type, rank] : all_types_rank_le_8()) {
    const bool in_list = !table_minus_one(type, rank);
    CHECK(classify_faithful_n1({{type, rank}}) == in_list);
  }
  // random multi-factor lists vs the table-oracle disjunction
  const auto types = all_types_rank_le_8();
  Rng rng(81);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<std::pair<SimpleType, int>> factors;
    bool expect = false;
    const int len = 1 + static_cast<int>(rng.uniform_below(3));
    for (int i = 0; i < len; ++i) {
      const auto& f = types[rng.uniform_below(types.size())];
      factors.push_back(f);
      expect = expect || !table_minus_one(f.first, f.second);
    }
    CHECK(classify_faithful_n1(factors) == expect);
  }
}

TEST_CASE("type token parsing") {
  CHECK(parse_simple_type("A2") == std::pair{SimpleType::A, 2});
  CHECK(parse_simple_type("D13") == std::pair{SimpleType::D, 13});
  CHECK_THROWS_AS(parse_simple_type("H4"), parse_error);
  CHECK_THROWS_AS(parse_simple_type("A"), parse_error);
  CHECK_THROWS_AS(parse_simple_type("Ax"), parse_error);
}
