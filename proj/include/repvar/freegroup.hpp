#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "repvar/common.hpp"

namespace repvar {

/// One letter f_i^{+1} or f_i^{-1} of a word in the free group F_n.
/// Generator indices are 1-based and must stay within the word's rank.
struct Letter {
  int gen;   // 1..n
  int sign;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return b.sign <=> a.sign;  // +1 before -1
  }
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

/// Freely reduced word in F_n. The letter sequence never contains an
/// adjacent inverse pair; every constructor path reduces, so two Words
/// are equal in the group iff they compare equal.
class Word {
 public:
  /// Identity element of F_n.
  explicit Word(int rank) : rank_(rank) {
    if (rank < 0) throw error("word rank must be nonnegative");
  }

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(int rank, const std::vector<Letter>& raw) {
    Word w(rank);
    w.letters_.reserve(raw.size());
    for (const Letter& l : raw) w.push_reduced(l);
    return w;
  }

  /// Single generator f_i.
  static Word generator(int rank, int i, int sign = +1) {
    return reduce(rank, {Letter{i, sign}});
  }

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  friend Word multiply(const Word&, const Word&);
  friend Word invert(const Word&);
  friend std::pair<Word, Word> cyclically_reduce(const Word&);
  friend Word shift_generators(const Word&, int, int);

  void push_reduced(const Letter& l) {
    if (l.gen < 1 || l.gen > rank_)
      throw error("generator index " + std::to_string(l.gen) +
                  " out of range for rank " + std::to_string(rank_));
    if (l.sign != 1 && l.sign != -1) throw error("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back() == inverse(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  int rank_;
  std::vector<Letter> letters_;
};

inline Word multiply(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw error("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                std::to_string(v.rank()));
  Word w = u;
  for (const Letter& l : v.letters()) w.push_reduced(l);
  return w;
}

inline Word invert(const Word& u) {
  Word w(u.rank());
  w.letters_.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    w.letters_.push_back(inverse(*it));
  return w;
}

/// u = conjugator * core * conjugator^{-1} with core cyclically reduced
/// (its first and last letters are not mutually inverse).
inline std::pair<Word, Word> cyclically_reduce(const Word& u) {
  std::size_t lo = 0, hi = u.length();
  while (hi - lo >= 2 && u.letters()[lo] == inverse(u.letters()[hi - 1])) {
    ++lo;
    --hi;
  }
  Word core(u.rank()), conj(u.rank());
  core.letters_.assign(u.letters().begin() + lo, u.letters().begin() + hi);
  conj.letters_.assign(u.letters().begin(), u.letters().begin() + lo);
  return {core, conj};
}

inline Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(invert(u), invert(v)), multiply(u, v));
}

/// Re-index generators by +offset into a word of the given larger rank.
inline Word shift_generators(const Word& u, int offset, int new_rank) {
  Word w(new_rank);
  w.letters_.reserve(u.length());
  for (const Letter& l : u.letters()) {
    if (l.gen + offset < 1 || l.gen + offset > new_rank)
      throw error("generator shift out of range");
    w.letters_.push_back(Letter{l.gen + offset, l.sign});
  }
  return w;
}

// -- textual grammar --------------------------------------------------------
//
// Whitespace-separated tokens, each `x<k>` optionally followed by `^<int>`.
// For rank <= 26 a lowercase letter is a generator and an uppercase letter
// its inverse; sugar tokens accept exponents too. Empty string = identity.

inline Word parse_word(const std::string& text, int rank) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t tok_start = i;
    int gen = 0;
    int sign = +1;
    if (text[i] == 'x' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        gen = gen * 10 + (text[i] - '0');
        if (gen > 1'000'000) throw parse_error("generator index too large", tok_start);
        ++i;
      }
    } else if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      const char c = text[i];
      if (std::islower(static_cast<unsigned char>(c))) {
        gen = c - 'a' + 1;
      } else {
        gen = c - 'A' + 1;
        sign = -1;
      }
      ++i;
    } else {
      throw parse_error(std::string("unexpected character '") + text[i] + "'", i);
    }
    if (gen < 1 || gen > rank)
      throw parse_error("generator index " + std::to_string(gen) +
                            " out of range for rank " + std::to_string(rank),
                        tok_start);
    long long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected integer exponent after '^'", i);
      exp = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        if (exp > 1'000'000) throw parse_error("exponent too large", tok_start);
        ++i;
      }
      if (neg) exp = -exp;
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw parse_error("malformed token", i);
    const long long total = exp * sign;
    for (long long k = 0; k < (total < 0 ? -total : total); ++k)
      raw.push_back(Letter{gen, total < 0 ? -1 : +1});
  }
  return Word::reduce(rank, raw);
}

/// Canonical text form; parse_word(format_word(w), w.rank()) == w.
/// Runs of a generator are printed with one exponent token.
inline std::string format_word(const Word& w) {
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long long e = static_cast<long long>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(ls[i].gen);
    if (e != 1) out += '^' + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace repvar
