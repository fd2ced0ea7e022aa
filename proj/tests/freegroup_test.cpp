#include <catch2/catch_amalgamated.hpp>

#include "repvar/freegroup.hpp"
#include "repvar/rng.hpp"

using namespace repvar;

namespace {

// Independent reduction oracle: rescan from scratch until no adjacent
// inverse pair is left (quadratic, unlike the stack-based implementation).
std::vector<Letter> oracle_reduce(std::vector<Letter> s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i].gen == s[i + 1].gen && s[i].sign == -s[i + 1].sign) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

std::vector<Letter> random_raw(Rng& rng, int rank, int len) {
  std::vector<Letter> raw;
  for (int i = 0; i < len; ++i)
    raw.push_back(Letter{1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(rank))),
                         rng.uniform_below(2) ? 1 : -1});
  return raw;
}

Word random_word(Rng& rng, int rank, int len) {
  return Word::reduce(rank, random_raw(rng, rank, len));
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(parse_word("a a^-1 b", 2) == parse_word("b", 2));
  CHECK(parse_word("a b b^-1 a", 2) == parse_word("a a", 2));
  CHECK(parse_word("", 2).is_identity());
}

TEST_CASE("reduce agrees with the rescan oracle and is idempotent") {
  Rng rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const auto raw = random_raw(rng, 3, static_cast<int>(rng.uniform_below(20)));
    const Word w = Word::reduce(3, raw);
    CHECK(w.letters() == oracle_reduce(raw));
    CHECK(Word::reduce(3, w.letters()) == w);
  }
}

TEST_CASE("reduce rejects out-of-range indices") {
  CHECK_THROWS_AS(Word::reduce(2, {Letter{3, 1}}), error);
  CHECK_THROWS_AS(Word::generator(2, 0), error);
}

TEST_CASE("multiply") {
  CHECK(multiply(parse_word("a b", 2), parse_word("b^-1 a", 2)) == parse_word("a a", 2));
  CHECK(multiply(parse_word("a", 2), parse_word("a^-1", 2)).is_identity());
  CHECK(multiply(parse_word("a b", 2), parse_word("b a", 2)) == parse_word("a b b a", 2));
  CHECK_THROWS_AS(multiply(Word(2), Word(3)), error);
}

TEST_CASE("multiply length bound and associativity") {
  Rng rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    const Word u = random_word(rng, 3, 12), v = random_word(rng, 3, 12), w = random_word(rng, 3, 12);
    CHECK(multiply(u, v).length() <= u.length() + v.length());
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, invert(u)).is_identity());
  }
}

TEST_CASE("invert") {
  CHECK(invert(parse_word("a b", 2)) == parse_word("B A", 2));
  CHECK(invert(Word(2)).is_identity());
  CHECK(invert(parse_word("a^-1", 1)) == parse_word("a", 1));
  Rng rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const Word u = random_word(rng, 3, 15);
    CHECK(invert(invert(u)) == u);
    CHECK(invert(u).length() == u.length());
  }
}

TEST_CASE("cyclic reduction") {
  {
    const auto [core, conj] = cyclically_reduce(parse_word("a b a^-1", 2));
    CHECK(core == parse_word("b", 2));
    CHECK(conj == parse_word("a", 2));
  }
  {
    const auto [core, conj] = cyclically_reduce(parse_word("a b", 2));
    CHECK(core == parse_word("a b", 2));
    CHECK(conj.is_identity());
  }
  {
    // peel two layers: a b a b^-1 a^-1 = (a b) a (a b)^-1
    const auto [core, conj] = cyclically_reduce(parse_word("a b a b^-1 a^-1", 2));
    CHECK(core == parse_word("a", 2));
    CHECK(conj == parse_word("a b", 2));
  }
}

TEST_CASE("cyclic reduction decomposition property") {
  Rng rng(14);
  for (int iter = 0; iter < 300; ++iter) {
    const Word u = random_word(rng, 3, 14);
    const auto [core, conj] = cyclically_reduce(u);
    CHECK(multiply(multiply(conj, core), invert(conj)) == u);
    if (core.length() >= 2) {
      const Letter first = core.letters().front(), last = core.letters().back();
      CHECK_FALSE(first == inverse(last));
    }
  }
}

TEST_CASE("parse grammar") {
  CHECK(parse_word("x1 x2^-1", 2).letters() == std::vector<Letter>{{1, 1}, {2, -1}});
  CHECK(parse_word("a B", 2).letters() == std::vector<Letter>{{1, 1}, {2, -1}});
  CHECK(parse_word("x1 x1^-1", 2).is_identity());
  CHECK(parse_word("a^3", 1) == parse_word("a a a", 1));
  CHECK(parse_word("x2^-2", 2) == parse_word("B B", 2));
  CHECK(parse_word("x1^0", 1).is_identity());
  CHECK(parse_word("  a   b ", 2) == parse_word("a b", 2));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_word("x3", 2), parse_error);
  CHECK_THROWS_AS(parse_word("a ^2", 2), parse_error);
  CHECK_THROWS_AS(parse_word("x1^", 2), parse_error);
  CHECK_THROWS_AS(parse_word("a!", 2), parse_error);
  try {
    parse_word("a b x9", 3);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("format round-trips") {
  CHECK(format_word(parse_word("a a b B", 2)) == "x1^2");
  CHECK(format_word(Word(3)).empty());
  Rng rng(15);
  for (int iter = 0; iter < 200; ++iter) {
    const Word u = random_word(rng, 3, 16);
    CHECK(parse_word(format_word(u), 3) == u);
  }
}

TEST_CASE("commutator and generator shift") {
  CHECK(commutator(Word::generator(2, 1), Word::generator(2, 2)) ==
        parse_word("A B a b", 2));
  CHECK(shift_generators(parse_word("a b", 2), 2, 4) == parse_word("x3 x4", 4));
  CHECK_THROWS_AS(shift_generators(parse_word("a b", 2), 3, 4), error);
}
