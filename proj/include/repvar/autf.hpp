#pragma once

#include <string>
#include <utility>
#include <vector>

#include "repvar/common.hpp"
#include "repvar/freegroup.hpp"

namespace repvar {

/// Endomorphism of F_n, stored as the images of the generators.
class Endomorphism {
 public:
  explicit Endomorphism(std::vector<Word> images) : images_(std::move(images)) {
    for (const Word& w : images_)
      if (w.rank() != rank())
        throw error("endomorphism image rank mismatch");
  }

  static Endomorphism identity(int n) {
    std::vector<Word> im;
    im.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) im.push_back(Word::generator(n, j));
    return Endomorphism(std::move(im));
  }

  int rank() const { return static_cast<int>(images_.size()); }
  const Word& image(int j) const {  // image of f_j, 1-based
    if (j < 1 || j > rank()) throw error("generator index out of range");
    return images_[static_cast<std::size_t>(j - 1)];
  }
  const std::vector<Word>& images() const { return images_; }

  bool is_identity() const {
    for (int j = 1; j <= rank(); ++j)
      if (image(j) != Word::generator(rank(), j)) return false;
    return true;
  }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<Word> images_;
};

/// Substitute the images of sigma for the letters of w and reduce.
inline Word apply(const Endomorphism& sigma, const Word& w) {
  if (sigma.rank() != w.rank()) throw error("rank mismatch in apply");
  Word out(w.rank());
  for (const Letter& l : w.letters()) {
    const Word& im = sigma.image(l.gen);
    out = multiply(out, l.sign > 0 ? im : invert(im));
  }
  return out;
}

/// (sigma . tau)(f) = sigma(tau(f)); tau is applied first.
inline Endomorphism compose(const Endomorphism& sigma, const Endomorphism& tau) {
  if (sigma.rank() != tau.rank()) throw error("rank mismatch in compose");
  std::vector<Word> im;
  im.reserve(tau.images().size());
  for (const Word& w : tau.images()) im.push_back(apply(sigma, w));
  return Endomorphism(std::move(im));
}

/// Integer abelianization matrix; row j holds the exponent sums of the
/// image of f_j. Inner automorphisms abelianize to the identity, which
/// gives a cheap certificate that an automorphism is NOT inner.
inline std::vector<std::vector<long long>> abelianization(const Endomorphism& sigma) {
  const int n = sigma.rank();
  std::vector<std::vector<long long>> m(
      static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (int j = 1; j <= n; ++j)
    for (const Letter& l : sigma.image(j).letters())
      m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l.gen - 1)] += l.sign;
  return m;
}

/// Automorphism of F_n: an endomorphism bundled with a certified inverse.
/// Both compositions are checked to be the identity at construction, so an
/// AutElement can only be built from genuinely invertible data.
class AutElement {
 public:
  AutElement(Endomorphism fwd, Endomorphism inv)
      : forward_(std::move(fwd)), inverse_(std::move(inv)) {
    if (!compose(forward_, inverse_).is_identity() ||
        !compose(inverse_, forward_).is_identity())
      throw error("automorphism inverse certificate failed");
  }

  static AutElement identity(int n) {
    return AutElement(Endomorphism::identity(n), Endomorphism::identity(n));
  }

  const Endomorphism& forward() const { return forward_; }
  const Endomorphism& inverse() const { return inverse_; }
  int rank() const { return forward_.rank(); }

  friend bool operator==(const AutElement& a, const AutElement& b) {
    return a.forward_ == b.forward_;  // inverse is determined by forward
  }

 private:
  Endomorphism forward_;
  Endomorphism inverse_;
};

inline AutElement compose(const AutElement& a, const AutElement& b) {
  return AutElement(compose(a.forward(), b.forward()),
                    compose(b.inverse(), a.inverse()));
}

inline AutElement inverse_of(const AutElement& a) {
  return AutElement(a.inverse(), a.forward());
}

namespace detail {
inline std::vector<Word> identity_images(int n) {
  std::vector<Word> im;
  im.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) im.push_back(Word::generator(n, j));
  return im;
}
}  // namespace detail

/// Swap of f_i and f_{i+1}.
inline AutElement nielsen_tau(int i, int n) {
  if (n < 2 || i < 1 || i >= n) throw error("nielsen_tau index out of range");
  auto im = detail::identity_images(n);
  std::swap(im[static_cast<std::size_t>(i - 1)], im[static_cast<std::size_t>(i)]);
  Endomorphism e{std::move(im)};
  return AutElement(e, e);
}

/// f_1 -> f_1^{-1}, other generators fixed.
inline AutElement nielsen_inv1(int n) {
  if (n < 1) throw error("rank must be positive");
  auto im = detail::identity_images(n);
  im[0] = Word::generator(n, 1, -1);
  Endomorphism e{std::move(im)};
  return AutElement(e, e);
}

/// Transvection f_1 -> f_1 f_2; inverse sends f_1 -> f_1 f_2^{-1}.
inline AutElement nielsen_s12(int n) {
  if (n < 2) throw error("transvection needs rank >= 2");
  auto fwd = detail::identity_images(n);
  fwd[0] = multiply(Word::generator(n, 1), Word::generator(n, 2));
  auto inv = detail::identity_images(n);
  inv[0] = multiply(Word::generator(n, 1), Word::generator(n, 2, -1));
  return AutElement(Endomorphism{std::move(fwd)}, Endomorphism{std::move(inv)});
}

/// The fixed generating set used by kernel tests: adjacent swaps, the
/// inversion inv1 and (for n >= 2) the transvection s12.
inline std::vector<AutElement> nielsen_generators(int n) {
  if (n < 1) throw error("rank must be positive");
  std::vector<AutElement> gens;
  for (int i = 1; i < n; ++i) gens.push_back(nielsen_tau(i, n));
  gens.push_back(nielsen_inv1(n));
  if (n >= 2) gens.push_back(nielsen_s12(n));
  return gens;
}

/// Names matching the automorphism-spec grammar, aligned with
/// nielsen_generators(n).
inline std::vector<std::string> nielsen_generator_names(int n) {
  if (n < 1) throw error("rank must be positive");
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) names.push_back("nielsen:tau" + std::to_string(i));
  names.push_back("nielsen:inv1");
  if (n >= 2) names.push_back("nielsen:s12");
  return names;
}

/// Inner automorphism int_t : x -> t x t^{-1}.
inline AutElement inner(const Word& t) {
  const int n = t.rank();
  const Word ti = invert(t);
  std::vector<Word> fwd, inv;
  fwd.reserve(static_cast<std::size_t>(n));
  inv.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const Word fj = Word::generator(n, j);
    fwd.push_back(multiply(multiply(t, fj), ti));
    inv.push_back(multiply(multiply(ti, fj), t));
  }
  return AutElement(Endomorphism{std::move(fwd)}, Endomorphism{std::move(inv)});
}

/// Artin generator of B_n inside Aut(F_n):
///   f_i -> f_i f_{i+1} f_i^{-1},  f_{i+1} -> f_i,  others fixed.
inline AutElement braid_generator(int i, int n) {
  if (n < 2 || i < 1 || i >= n) throw error("braid generator index out of range");
  auto fwd = detail::identity_images(n);
  auto inv = detail::identity_images(n);
  const Word fi = Word::generator(n, i);
  const Word fj = Word::generator(n, i + 1);
  fwd[static_cast<std::size_t>(i - 1)] = multiply(multiply(fi, fj), invert(fi));
  fwd[static_cast<std::size_t>(i)] = fi;
  inv[static_cast<std::size_t>(i - 1)] = fj;
  inv[static_cast<std::size_t>(i)] = multiply(multiply(invert(fj), fi), fj);
  return AutElement(Endomorphism{std::move(fwd)}, Endomorphism{std::move(inv)});
}

// -- automorphism spec grammar ----------------------------------------------
//
// `nielsen:tau<i>` | `nielsen:inv1` | `nielsen:s12` | `inner:<word>` |
// `braid:<i>`, composed with `;` and applied right to left, so "a;b" maps
// w to a(b(w)).

inline AutElement parse_autospec(const std::string& text, int n) {
  AutElement result = AutElement::identity(n);
  std::size_t pos = 0;
  bool first = true;
  while (pos <= text.size()) {
    std::size_t sep = text.find(';', pos);
    const std::size_t end = (sep == std::string::npos) ? text.size() : sep;
    std::string part = text.substr(pos, end - pos);
    // trim
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.erase(part.begin());
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.pop_back();
    if (part.empty()) throw parse_error("empty automorphism factor", pos);

    AutElement factor = AutElement::identity(n);
    if (part.rfind("nielsen:", 0) == 0) {
      const std::string name = part.substr(8);
      if (name == "inv1")
        factor = nielsen_inv1(n);
      else if (name == "s12")
        factor = nielsen_s12(n);
      else if (name.rfind("tau", 0) == 0) {
        int i = 0;
        try {
          i = std::stoi(name.substr(3));
        } catch (const std::exception&) {
          throw parse_error("bad nielsen generator '" + part + "'", pos);
        }
        factor = nielsen_tau(i, n);
      } else {
        throw parse_error("unknown nielsen generator '" + part + "'", pos);
      }
    } else if (part.rfind("inner:", 0) == 0) {
      factor = inner(parse_word(part.substr(6), n));
    } else if (part.rfind("braid:", 0) == 0) {
      int i = 0;
      try {
        i = std::stoi(part.substr(6));
      } catch (const std::exception&) {
        throw parse_error("bad braid index '" + part + "'", pos);
      }
      factor = braid_generator(i, n);
    } else {
      throw parse_error("unknown automorphism spec '" + part + "'", pos);
    }

    result = first ? factor : compose(result, factor);
    first = false;
    if (sep == std::string::npos) break;
    pos = sep + 1;
  }
  return result;
}

}  // namespace repvar
