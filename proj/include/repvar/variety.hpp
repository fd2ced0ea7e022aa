#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "repvar/autf.hpp"
#include "repvar/common.hpp"
#include "repvar/freegroup.hpp"
#include "repvar/groups.hpp"

namespace repvar {

/// Point of X = Hom(F_n, G) = G^n, stored as the tuple of generator images.
template <class K>
struct Point {
  GroupSpec spec;
  std::vector<GroupElement<K>> coords;

  int arity() const { return static_cast<int>(coords.size()); }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.spec != b.spec || a.coords.size() != b.coords.size())
      throw error("point shape mismatch");
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      if (!(a.coords[i] == b.coords[i])) return false;
    return true;
  }
};

template <class K>
Point<K> make_point(const GroupSpec& spec, std::vector<GroupElement<K>> coords) {
  for (const auto& g : coords)
    if (g.spec != spec) throw error("point coordinate has a different group descriptor");
  return Point<K>{spec, std::move(coords)};
}

template <class K>
Point<K> identity_point(const GroupSpec& spec, int n) {
  std::vector<GroupElement<K>> coords(static_cast<std::size_t>(n), identity_element<K>(spec));
  return Point<K>{spec, std::move(coords)};
}

/// Coordinatewise lexicographic order (the orbit canonical form uses its
/// minimum).
template <class K>
int compare(const Point<K>& a, const Point<K>& b) {
  if (a.spec != b.spec || a.coords.size() != b.coords.size())
    throw error("point shape mismatch");
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const int c = compare(a.coords[i], b.coords[i]);
    if (c != 0) return c;
  }
  return 0;
}

/// X = G^n is itself a group under componentwise multiplication.
template <class K>
Point<K> mul_pointwise(const Point<K>& x, const Point<K>& z) {
  if (x.spec != z.spec || x.coords.size() != z.coords.size())
    throw error("point shape mismatch");
  std::vector<GroupElement<K>> coords;
  coords.reserve(x.coords.size());
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    coords.push_back(mul(x.coords[i], z.coords[i]));
  return Point<K>{x.spec, std::move(coords)};
}

/// w(x): substitute the coordinates of x for the generators of w and
/// multiply out. A homomorphism in w: evaluate(uv, x) = evaluate(u, x) *
/// evaluate(v, x).
template <class K>
GroupElement<K> evaluate_word(const Word& w, const Point<K>& x) {
  if (w.rank() != x.arity()) throw error("word rank does not match point arity");
  GroupElement<K> acc = identity_element<K>(x.spec);
  std::vector<std::optional<GroupElement<K>>> inverses(x.coords.size());
  for (const Letter& l : w.letters()) {
    const std::size_t j = static_cast<std::size_t>(l.gen - 1);
    if (l.sign > 0) {
      acc = mul(acc, x.coords[j]);
    } else {
      if (!inverses[j]) inverses[j] = inv(x.coords[j]);
      acc = mul(acc, *inverses[j]);
    }
  }
  return acc;
}

/// sigma_X(x) = x . sigma: coordinate j of the result is sigma(f_j)(x).
/// Note (sigma tau)_X = tau_X . sigma_X  -- this is an anti-action; the
/// genuine left action is act() below.
template <class K>
Point<K> sigma_X(const Endomorphism& sigma, const Point<K>& x) {
  if (sigma.rank() != x.arity()) throw error("endomorphism rank does not match point arity");
  std::vector<GroupElement<K>> coords;
  coords.reserve(x.coords.size());
  for (int j = 1; j <= sigma.rank(); ++j)
    coords.push_back(evaluate_word(sigma.image(j), x));
  return Point<K>{x.spec, std::move(coords)};
}

/// gamma_X(x) = gamma . x, coordinatewise.
template <class K>
Point<K> gamma_X(const GroupAutomorphism<K>& gamma, const Point<K>& x) {
  std::vector<GroupElement<K>> coords;
  coords.reserve(x.coords.size());
  for (const auto& g : x.coords) coords.push_back(apply_automorphism(gamma, g));
  return Point<K>{x.spec, std::move(coords)};
}

/// The left action of Aut(F_n) x Aut(G):  (sigma, gamma) . x =
/// gamma_X(sigma^{-1}_X(x)). The inverse makes the anti-action of sigma_X
/// into an action; sigma_X and gamma_X commute.
template <class K>
Point<K> act(const AutElement& sigma, const GroupAutomorphism<K>& gamma, const Point<K>& x) {
  return gamma_X(gamma, sigma_X(sigma.inverse(), x));
}

// -- the finite-R orbit quotient ---------------------------------------------

/// R-orbit of a point, represented by its order_key-minimal member.
template <class K>
struct OrbitRep {
  Point<K> canonical;
  long long orbit_size;

  friend bool operator==(const OrbitRep& a, const OrbitRep& b) {
    return a.orbit_size == b.orbit_size && a.canonical == b.canonical;
  }
};

template <class K>
OrbitRep<K> orbit(const Point<K>& x, const AutSubgroupR<K>& r) {
  std::vector<Point<K>> members;
  members.reserve(r.elements.size());
  for (const auto& gamma : r.elements) members.push_back(gamma_X(gamma, x));
  std::sort(members.begin(), members.end(),
            [](const Point<K>& a, const Point<K>& b) { return compare(a, b) < 0; });
  long long distinct = 1;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (compare(members[i - 1], members[i]) != 0) ++distinct;
  return OrbitRep<K>{members.front(), distinct};
}

/// The descended map on X//R: well-defined because sigma_X permutes
/// R-orbits. Applies the raw sigma_X of the forward endomorphism; callers
/// wanting the left action pass sigma.inverse() themselves (as act does).
template <class K>
OrbitRep<K> sigma_on_quotient(const AutElement& sigma, const OrbitRep<K>& o,
                              const AutSubgroupR<K>& r) {
  return orbit(sigma_X(sigma.forward(), o.canonical), r);
}

// -- built-in pushforwards ----------------------------------------------------

enum class Pushforward {
  Sl2ToPsl2,   // central projection SL2 -> PSL2
  BorelToSl2,  // inclusion of the Borel subgroup, identity on matrices
};

template <class K>
Point<K> pushforward(Pushforward theta, const Point<K>& x) {
  switch (theta) {
    case Pushforward::Sl2ToPsl2: {
      if (x.spec.kind != GroupKind::SL2 || !x.spec.finite_field())
        throw error("Sl2ToPsl2 needs an SL2 point over a finite field");
      if constexpr (std::is_same_v<K, Fp>) {
        std::vector<GroupElement<K>> coords;
        coords.reserve(x.coords.size());
        for (const auto& g : x.coords) coords.push_back(psl2_canonicalize(x.spec.p, g.mat));
        return Point<K>{GroupSpec{GroupKind::PSL2, 2, x.spec.p}, std::move(coords)};
      } else {
        throw error("Sl2ToPsl2 needs an SL2 point over a finite field");
      }
    }
    case Pushforward::BorelToSl2:
      for (const auto& g : x.coords)
        if (!scalar_is_zero(g.mat.at(1, 0)))
          throw error("BorelToSl2 applied to a point outside the Borel subgroup");
      return x;
  }
  throw error("unknown pushforward");
}

// -- exhaustive enumeration of X ----------------------------------------------

/// Streams every point of domain^n exactly once, last coordinate fastest,
/// in increasing coordinatewise order. The bound guards |G|^n.
class PointEnumerator {
 public:
  PointEnumerator(const GroupDomain& dom, int n, long long bound = 1'000'000)
      : spec_(dom.spec), elements_(enumerate_domain(dom, bound)), idx_(static_cast<std::size_t>(n), 0) {
    if (n < 1) throw error("point arity must be positive");
    const long long size = static_cast<long long>(elements_.size());
    long long total = 1;
    for (int i = 0; i < n; ++i) {
      if (total > bound / size)
        throw error("point enumeration would exceed bound " + std::to_string(bound));
      total *= size;
    }
    total_ = total;
  }

  long long total() const { return total_; }

  std::optional<Point<Fp>> next() {
    if (done_) return std::nullopt;
    std::vector<GroupElement<Fp>> coords;
    coords.reserve(idx_.size());
    for (std::size_t i : idx_) coords.push_back(elements_[i]);
    Point<Fp> out{spec_, std::move(coords)};
    std::size_t pos = idx_.size();
    while (pos > 0) {
      --pos;
      if (++idx_[pos] < elements_.size()) break;
      idx_[pos] = 0;
      if (pos == 0) done_ = true;
    }
    return out;
  }

 private:
  GroupSpec spec_;
  std::vector<GroupElement<Fp>> elements_;
  std::vector<std::size_t> idx_;
  long long total_ = 0;
  bool done_ = false;
};

}  // namespace repvar
