#include <catch2/catch_amalgamated.hpp>

#include "repvar/autf.hpp"
#include "repvar/rng.hpp"

using namespace repvar;

namespace {

Word random_word(Rng& rng, int rank, int len) {
  std::vector<Letter> raw;
  for (int i = 0; i < len; ++i)
    raw.push_back(Letter{1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(rank))),
                         rng.uniform_below(2) ? 1 : -1});
  return Word::reduce(rank, raw);
}

Endomorphism random_endo(Rng& rng, int rank) {
  std::vector<Word> images;
  for (int j = 0; j < rank; ++j)
    images.push_back(random_word(rng, rank, 1 + static_cast<int>(rng.uniform_below(4))));
  return Endomorphism(std::move(images));
}

/// All freely reduced words of length <= max_len (small ranks only).
std::vector<Word> short_words(int rank, int max_len) {
  std::vector<Word> out{Word(rank)};
  std::vector<Word> layer{Word(rank)};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (int g = 1; g <= rank; ++g)
        for (int s : {1, -1}) {
          Word v = multiply(w, Word::generator(rank, g, s));
          if (v.length() == w.length() + 1) {
            out.push_back(v);
            next.push_back(v);
          }
        }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("apply substitutes and reduces") {
  CHECK(apply(nielsen_s12(2).forward(), parse_word("a B", 2)) == parse_word("a", 2));
  Rng rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    const Word w = random_word(rng, 3, 10);
    CHECK(apply(Endomorphism::identity(3), w) == w);
  }
  CHECK(apply(inner(parse_word("a", 2)).forward(), parse_word("b b", 2)) ==
        parse_word("a b b A", 2));
}

TEST_CASE("apply is a homomorphism and respects composition") {
  Rng rng(22);
  for (int iter = 0; iter < 200; ++iter) {
    const Endomorphism s = random_endo(rng, 3), t = random_endo(rng, 3);
    const Word u = random_word(rng, 3, 8), v = random_word(rng, 3, 8);
    CHECK(apply(s, multiply(u, v)) == multiply(apply(s, u), apply(s, v)));
    CHECK(apply(compose(s, t), u) == apply(s, apply(t, u)));
  }
}

TEST_CASE("compose") {
  const Endomorphism s12 = nielsen_s12(2).forward();
  CHECK(compose(s12, Endomorphism::identity(2)) == s12);
  CHECK(compose(s12, s12).image(1) == parse_word("a b b", 2));
  const Endomorphism i1 = nielsen_inv1(2).forward();
  CHECK(compose(i1, i1).is_identity());
  CHECK_THROWS_AS(compose(s12, Endomorphism::identity(3)), error);
}

TEST_CASE("nielsen generators") {
  CHECK(nielsen_generators(1).size() == 1);
  CHECK(nielsen_generators(2).size() == 3);
  CHECK(nielsen_generators(4).size() == 5);
  CHECK(nielsen_s12(2).inverse().image(1) == parse_word("a B", 2));
  CHECK(nielsen_generator_names(2) ==
        std::vector<std::string>{"nielsen:tau1", "nielsen:inv1", "nielsen:s12"});
  CHECK_THROWS_AS(nielsen_generators(0), error);
}

TEST_CASE("aut element certificates are checked") {
  // a genuinely wrong inverse must be rejected
  CHECK_THROWS_AS(AutElement(nielsen_s12(2).forward(), nielsen_s12(2).forward()), error);
  for (const AutElement& g : nielsen_generators(3)) {
    CHECK(compose(g.forward(), g.inverse()).is_identity());
    CHECK(compose(g.inverse(), g.forward()).is_identity());
  }
}

TEST_CASE("inner automorphisms") {
  CHECK(inner(Word(2)) == AutElement::identity(2));
  const AutElement t = inner(parse_word("a", 2));
  CHECK(t.forward().image(1) == parse_word("a", 2));
  CHECK(t.forward().image(2) == parse_word("a b A", 2));
  CHECK(inner(parse_word("a b", 2)) ==
        compose(inner(parse_word("a", 2)), inner(parse_word("b", 2))));
}

TEST_CASE("free groups have trivial center: inner(t) = id only for empty t") {
  for (int rank : {2, 3})
    for (const Word& t : short_words(rank, 4)) {
      if (t.is_identity()) continue;
      CHECK_FALSE(inner(t).forward().is_identity());
    }
}

TEST_CASE("braid generators") {
  const AutElement b1 = braid_generator(1, 3);
  CHECK(b1.forward().image(1) == parse_word("a b A", 3));
  CHECK(b1.forward().image(2) == parse_word("a", 3));
  CHECK(b1.forward().image(3) == parse_word("c", 3));
  CHECK_THROWS_AS(braid_generator(3, 3), error);
  CHECK_THROWS_AS(braid_generator(0, 3), error);
}

TEST_CASE("braid and far-commutation relations hold for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i + 1 < n; ++i) {
      const AutElement bi = braid_generator(i, n), bj = braid_generator(i + 1, n);
      CHECK(compose(compose(bi, bj), bi) == compose(compose(bj, bi), bj));
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        CHECK(compose(braid_generator(i, n), braid_generator(j, n)) ==
              compose(braid_generator(j, n), braid_generator(i, n)));
  }
}

TEST_CASE("equals compares generator images") {
  CHECK(Endomorphism::identity(2) == compose(nielsen_inv1(2).forward(), nielsen_inv1(2).forward()));
  CHECK_FALSE(nielsen_s12(2).forward() == Endomorphism::identity(2));
}

TEST_CASE("abelianization separates inner from braid") {
  for (const Word& t : short_words(2, 3)) {
    const auto ab = abelianization(inner(t).forward());
    CHECK(ab == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
  }
  const auto ab = abelianization(braid_generator(1, 3).forward());
  CHECK(ab == std::vector<std::vector<long long>>{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
}

TEST_CASE("autospec grammar") {
  CHECK(parse_autospec("nielsen:s12", 2) == nielsen_s12(2));
  CHECK(parse_autospec("nielsen:tau1", 3) == nielsen_tau(1, 3));
  CHECK(parse_autospec("braid:2", 3) == braid_generator(2, 3));
  CHECK(parse_autospec("inner:a b", 2) == inner(parse_word("a b", 2)));
  // right-to-left: "a;b" applies b first
  CHECK(parse_autospec("nielsen:s12;braid:1", 3) ==
        compose(nielsen_s12(3), braid_generator(1, 3)));
  CHECK_THROWS_AS(parse_autospec("nielsen:bogus", 2), parse_error);
  CHECK_THROWS_AS(parse_autospec("", 2), parse_error);
  CHECK_THROWS_AS(parse_autospec("braid:9", 3), error);
}
