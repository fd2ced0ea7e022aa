#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "repvar/common.hpp"
#include "repvar/matrix.hpp"
#include "repvar/rng.hpp"
#include "repvar/scalar.hpp"

namespace repvar {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest primitive root mod an odd prime p.
inline long long primitive_root(long long p) {
  if (!is_prime(p) || p < 3) throw error("primitive_root needs an odd prime");
  std::vector<long long> prime_factors;
  long long m = p - 1;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : prime_factors) {
      // g^((p-1)/q) mod p by square-and-multiply
      long long e = (p - 1) / q, base = g % p, acc = 1;
      while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw error("no primitive root found");  // unreachable for prime p
}

// -- group descriptors -------------------------------------------------------

enum class GroupKind { SL2, PSL2, GL };

/// Which exact matrix group an element lives in. p == 0 means exact
/// rationals (only supported for SL2); otherwise p is an odd prime.
struct GroupSpec {
  GroupKind kind;
  int dim;      // 2 for SL2/PSL2
  long long p;  // 0 = rationals

  bool finite_field() const { return p != 0; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

  std::string to_string() const {
    switch (kind) {
      case GroupKind::SL2:
        return p == 0 ? "sl2:Q" : "sl2:p=" + std::to_string(p);
      case GroupKind::PSL2:
        return "psl2:p=" + std::to_string(p);
      case GroupKind::GL:
        return "gl:d=" + std::to_string(dim) + ",p=" + std::to_string(p);
    }
    throw error("bad group kind");
  }
};

namespace detail {
inline long long parse_positive_int(const std::string& s, std::size_t pos_hint) {
  if (s.empty()) throw parse_error("expected integer", pos_hint);
  long long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw parse_error("expected integer, got '" + s + "'", pos_hint);
    v = v * 10 + (c - '0');
    if (v > 1'000'000'000LL) throw parse_error("integer too large", pos_hint);
  }
  return v;
}

inline void check_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw error("modulus must be an odd prime, got " + std::to_string(p));
}
}  // namespace detail

inline GroupSpec parse_group_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw parse_error("missing ':' in group descriptor", 0);
  const std::string head = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  if (head == "sl2" || head == "psl2") {
    if (head == "sl2" && tail == "Q") return GroupSpec{GroupKind::SL2, 2, 0};
    if (tail.rfind("p=", 0) != 0) throw parse_error("expected p=<prime>", colon + 1);
    const long long p = detail::parse_positive_int(tail.substr(2), colon + 3);
    detail::check_odd_prime(p);
    return GroupSpec{head == "sl2" ? GroupKind::SL2 : GroupKind::PSL2, 2, p};
  }
  if (head == "gl") {
    if (tail.rfind("d=", 0) != 0) throw parse_error("expected d=<dim>,p=<prime>", colon + 1);
    const auto comma = tail.find(',');
    if (comma == std::string::npos || tail.compare(comma + 1, 2, "p=") != 0)
      throw parse_error("expected d=<dim>,p=<prime>", colon + 1);
    const long long d = detail::parse_positive_int(tail.substr(2, comma - 2), colon + 3);
    const long long p = detail::parse_positive_int(tail.substr(comma + 3), colon + comma + 4);
    if (d < 1 || d > 16) throw error("gl dimension out of range");
    detail::check_odd_prime(p);
    return GroupSpec{GroupKind::GL, static_cast<int>(d), p};
  }
  throw parse_error("unknown group '" + head + "'", 0);
}

/// Sampling/enumeration domain: a whole group, or one of the two named
/// solvable stand-ins inside SL2(F_p) (upper-triangular Borel subgroup,
/// central subgroup {I, -I}).
enum class GroupSubset { Full, Borel, Center };

struct GroupDomain {
  GroupSpec spec;
  GroupSubset subset = GroupSubset::Full;

  friend bool operator==(const GroupDomain&, const GroupDomain&) = default;

  std::string to_string() const {
    switch (subset) {
      case GroupSubset::Full:
        return spec.to_string();
      case GroupSubset::Borel:
        return "borel:p=" + std::to_string(spec.p);
      case GroupSubset::Center:
        return "center:p=" + std::to_string(spec.p);
    }
    throw error("bad subset");
  }
};

inline GroupDomain parse_group_domain(const std::string& text) {
  if (text.rfind("borel:p=", 0) == 0 || text.rfind("center:p=", 0) == 0) {
    const bool borel = text[0] == 'b';
    const long long p = detail::parse_positive_int(text.substr(borel ? 8 : 9), 8);
    detail::check_odd_prime(p);
    return GroupDomain{GroupSpec{GroupKind::SL2, 2, p},
                       borel ? GroupSubset::Borel : GroupSubset::Center};
  }
  return GroupDomain{parse_group_spec(text), GroupSubset::Full};
}

// -- elements ----------------------------------------------------------------

template <class K>
K to_scalar(const GroupSpec& spec, long long v);

template <>
inline Fp to_scalar<Fp>(const GroupSpec& spec, long long v) {
  if (spec.p == 0) throw error("descriptor is rational but scalar type is Fp");
  return Fp(v, spec.p);
}

template <>
inline Rat to_scalar<Rat>(const GroupSpec& spec, long long v) {
  if (spec.p != 0) throw error("descriptor is modular but scalar type is Rat");
  return Rat(v);
}

/// Canonical sign representative of a determinant-1 matrix mod +-1: the
/// first nonzero entry in reading order lands in {1, ..., (p-1)/2}.
inline Matrix<Fp> psl2_sign_canonicalize(const Matrix<Fp>& m, long long p) {
  for (const Fp& x : m.entries()) {
    if (x.value() == 0) continue;
    return x.value() <= (p - 1) / 2 ? m : m.negate();
  }
  throw error("zero matrix cannot lie in PSL2");
}

/// Element of SL2, PSL2 or GL_d. Construction validates membership and,
/// for PSL2, stores the canonical sign lift, so equality and ordering are
/// plain entrywise comparisons.
template <class K>
struct GroupElement {
  GroupSpec spec;
  Matrix<K> mat;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    if (a.spec != b.spec) throw error("group descriptor mismatch");
    return a.mat == b.mat;
  }
};

template <class K>
GroupElement<K> make_element(const GroupSpec& spec, Matrix<K> m) {
  const int want = spec.kind == GroupKind::GL ? spec.dim : 2;
  if (m.dim() != want) throw error("matrix dimension does not match group descriptor");
  const K det = m.det();
  const K one = to_scalar<K>(spec, 1);
  switch (spec.kind) {
    case GroupKind::SL2:
      if (scalar_compare(det, one) != 0) throw error("matrix determinant is not 1");
      break;
    case GroupKind::PSL2: {
      if (scalar_compare(det, one) != 0) throw error("matrix determinant is not 1");
      if constexpr (std::is_same_v<K, Fp>) {
        m = psl2_sign_canonicalize(m, spec.p);
      } else {
        throw error("psl2 requires a finite field");
      }
      break;
    }
    case GroupKind::GL:
      if (scalar_is_zero(det)) throw error("matrix is singular");
      break;
  }
  return GroupElement<K>{spec, std::move(m)};
}

/// PSL2 class of a determinant-1 matrix (canonical representative).
inline GroupElement<Fp> psl2_canonicalize(long long p, const Matrix<Fp>& m) {
  return make_element(GroupSpec{GroupKind::PSL2, 2, p}, m);
}

template <class K>
GroupElement<K> identity_element(const GroupSpec& spec) {
  const int d = spec.kind == GroupKind::GL ? spec.dim : 2;
  return GroupElement<K>{spec, Matrix<K>::identity(d, to_scalar<K>(spec, 1))};
}

template <class K>
GroupElement<K> mul(const GroupElement<K>& a, const GroupElement<K>& b) {
  if (a.spec != b.spec) throw error("group descriptor mismatch");
  Matrix<K> m = a.mat * b.mat;
  if constexpr (std::is_same_v<K, Fp>) {
    if (a.spec.kind == GroupKind::PSL2) m = psl2_sign_canonicalize(m, a.spec.p);
  }
  return GroupElement<K>{a.spec, std::move(m)};
}

template <class K>
GroupElement<K> inv(const GroupElement<K>& a) {
  Matrix<K> m = a.mat.inverse();
  if constexpr (std::is_same_v<K, Fp>) {
    if (a.spec.kind == GroupKind::PSL2) m = psl2_sign_canonicalize(m, a.spec.p);
  }
  return GroupElement<K>{a.spec, std::move(m)};
}

template <class K>
bool equals(const GroupElement<K>& a, const GroupElement<K>& b) {
  return a == b;
}

template <class K>
int compare(const GroupElement<K>& a, const GroupElement<K>& b) {
  if (a.spec != b.spec) throw error("group descriptor mismatch");
  return matrix_compare(a.mat, b.mat);
}

/// Total-order token, lexicographic on canonicalized entries.
inline std::vector<long long> order_key(const GroupElement<Fp>& g) {
  std::vector<long long> key;
  key.reserve(g.mat.entries().size());
  for (const Fp& x : g.mat.entries()) key.push_back(x.value());
  return key;
}

/// Least m >= 1 with g^m = e, or nullopt if the order exceeds the cutoff.
template <class K>
std::optional<long long> element_order(const GroupElement<K>& g, long long cutoff) {
  const GroupElement<K> e = identity_element<K>(g.spec);
  GroupElement<K> acc = g;
  for (long long m = 1; m <= cutoff; ++m) {
    if (acc == e) return m;
    acc = mul(acc, g);
  }
  return std::nullopt;
}

template <class K>
GroupElement<K> power(const GroupElement<K>& g, long long e) {
  GroupElement<K> base = e < 0 ? inv(g) : g;
  long long n = e < 0 ? -e : e;
  GroupElement<K> acc = identity_element<K>(g.spec);
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

// -- the quadric model of SL2 ------------------------------------------------
//
// [[a,b],[c,d]] -> (a, d, b, -c) identifies SL2 with the affine quadric
// x1*x2 + x3*x4 = 1.

template <class K>
std::array<K, 4> sl2_to_quadric(const GroupElement<K>& g) {
  if (g.spec.kind != GroupKind::SL2) throw error("quadric model needs an SL2 element");
  return {g.mat.at(0, 0), g.mat.at(1, 1), g.mat.at(0, 1), -g.mat.at(1, 0)};
}

template <class K>
GroupElement<K> quadric_to_sl2(const GroupSpec& spec, const std::array<K, 4>& x) {
  if (spec.kind != GroupKind::SL2) throw error("quadric model needs an SL2 descriptor");
  return make_element(spec, Matrix<K>(2, {x[0], x[2], -x[3], x[1]}));
}

// -- sampling ----------------------------------------------------------------

namespace detail {
inline Fp random_fp(long long p, Rng& rng) {
  return Fp(static_cast<long long>(rng.uniform_below(static_cast<std::uint64_t>(p))), p);
}
}  // namespace detail

/// Uniform over the finite group. SL2 is sampled by drawing uniform GL2 by
/// rejection and scaling the first row by det^{-1} (fibers of det have equal
/// size); PSL2 projects the SL2 sample.
inline GroupElement<Fp> random_element(const GroupSpec& spec, Rng& rng) {
  if (!spec.finite_field()) throw error("uniform sampling needs a finite group");
  const long long p = spec.p;
  const int d = spec.kind == GroupKind::GL ? spec.dim : 2;
  while (true) {
    std::vector<Fp> e;
    e.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d * d; ++i) e.push_back(detail::random_fp(p, rng));
    Matrix<Fp> m(d, std::move(e));
    const Fp det = m.det();
    if (scalar_is_zero(det)) continue;
    if (spec.kind == GroupKind::GL) return GroupElement<Fp>{spec, std::move(m)};
    const Fp di = det.inverse();
    for (int j = 0; j < 2; ++j) m.at(0, j) = m.at(0, j) * di;
    if (spec.kind == GroupKind::SL2) return GroupElement<Fp>{spec, std::move(m)};
    return GroupElement<Fp>{spec, psl2_sign_canonicalize(m, p)};
  }
}

/// Uniform over the Borel subgroup [[a,b],[0,a^{-1}]] of SL2(F_p).
inline GroupElement<Fp> random_borel_element(long long p, Rng& rng) {
  detail::check_odd_prime(p);
  const Fp a(1 + static_cast<long long>(rng.uniform_below(static_cast<std::uint64_t>(p - 1))), p);
  const Fp b = detail::random_fp(p, rng);
  return GroupElement<Fp>{GroupSpec{GroupKind::SL2, 2, p},
                          Matrix<Fp>(2, {a, b, Fp(0, p), a.inverse()})};
}

inline GroupElement<Fp> random_domain_element(const GroupDomain& dom, Rng& rng) {
  switch (dom.subset) {
    case GroupSubset::Full:
      return random_element(dom.spec, rng);
    case GroupSubset::Borel:
      return random_borel_element(dom.spec.p, rng);
    case GroupSubset::Center: {
      const auto e = identity_element<Fp>(dom.spec);
      return rng.uniform_below(2) == 0 ? e : GroupElement<Fp>{dom.spec, e.mat.negate()};
    }
  }
  throw error("bad subset");
}

// -- enumeration -------------------------------------------------------------

inline long long domain_size(const GroupDomain& dom) {
  const long long p = dom.spec.p;
  if (p == 0) throw error("cannot enumerate an infinite group");
  switch (dom.subset) {
    case GroupSubset::Borel:
      return p * (p - 1);
    case GroupSubset::Center:
      return 2;
    case GroupSubset::Full:
      break;
  }
  switch (dom.spec.kind) {
    case GroupKind::SL2:
      return p * (p * p - 1);
    case GroupKind::PSL2:
      return p * (p * p - 1) / 2;
    case GroupKind::GL: {
      long long n = 1, pd = 1;
      for (int i = 0; i < dom.spec.dim; ++i) pd *= p;
      long long pi = 1;
      for (int i = 0; i < dom.spec.dim; ++i) {
        n *= pd - pi;
        if (n < 0 || n > (1LL << 62)) throw error("group too large to enumerate");
        pi *= p;
      }
      return n;
    }
  }
  throw error("bad group kind");
}

/// Every element exactly once, in increasing order_key order.
inline std::vector<GroupElement<Fp>> enumerate_domain(const GroupDomain& dom,
                                                      long long bound = 1'000'000) {
  const long long size = domain_size(dom);
  if (size > bound)
    throw error("enumeration of " + dom.to_string() + " has " + std::to_string(size) +
                " elements, exceeding bound " + std::to_string(bound));
  const long long p = dom.spec.p;
  const GroupSpec spec = dom.spec;
  std::vector<GroupElement<Fp>> out;
  out.reserve(static_cast<std::size_t>(size));
  switch (dom.subset) {
    case GroupSubset::Center: {
      const auto e = identity_element<Fp>(spec);
      out.push_back(e);
      out.push_back(GroupElement<Fp>{spec, e.mat.negate()});
      break;
    }
    case GroupSubset::Borel: {
      for (long long a = 1; a < p; ++a)
        for (long long b = 0; b < p; ++b)
          out.push_back(GroupElement<Fp>{
              spec, Matrix<Fp>(2, {Fp(a, p), Fp(b, p), Fp(0, p), Fp(a, p).inverse()})});
      break;
    }
    case GroupSubset::Full: {
      if (spec.kind == GroupKind::GL) {
        // odometer over all d*d entry tuples, keep the nonsingular ones
        const int dd = spec.dim * spec.dim;
        std::vector<long long> idx(static_cast<std::size_t>(dd), 0);
        while (true) {
          std::vector<Fp> e;
          e.reserve(static_cast<std::size_t>(dd));
          for (long long v : idx) e.push_back(Fp(v, p));
          Matrix<Fp> m(spec.dim, std::move(e));
          if (!scalar_is_zero(m.det())) out.push_back(GroupElement<Fp>{spec, std::move(m)});
          int pos = dd - 1;
          while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == p) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
        }
      } else {
        // determinant-1 matrices: given (a,b,c) with a != 0, d is determined;
        // for a = 0, bc = -1 and d is free.
        const bool project = spec.kind == GroupKind::PSL2;
        for (long long a = 0; a < p; ++a)
          for (long long b = 0; b < p; ++b)
            for (long long c = 0; c < p; ++c) {
              if (a == 0) {
                if ((b * c) % p != p - 1) continue;
                for (long long d = 0; d < p; ++d) {
                  Matrix<Fp> m(2, {Fp(a, p), Fp(b, p), Fp(c, p), Fp(d, p)});
                  if (project) {
                    Matrix<Fp> cm = psl2_sign_canonicalize(m, p);
                    if (!(cm == m)) continue;  // keep canonical lift only
                  }
                  out.push_back(GroupElement<Fp>{spec, std::move(m)});
                }
              } else {
                const Fp d = (Fp(1, p) + Fp(b, p) * Fp(c, p)) * Fp(a, p).inverse();
                Matrix<Fp> m(2, {Fp(a, p), Fp(b, p), Fp(c, p), d});
                if (project) {
                  Matrix<Fp> cm = psl2_sign_canonicalize(m, p);
                  if (!(cm == m)) continue;
                }
                out.push_back(GroupElement<Fp>{spec, std::move(m)});
              }
            }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupElement<Fp>& x, const GroupElement<Fp>& y) {
    return matrix_compare(x.mat, y.mat) < 0;
  });
  if (static_cast<long long>(out.size()) != size)
    throw error("enumeration size mismatch (internal)");
  return out;
}

// -- automorphisms of G ------------------------------------------------------

/// Supported automorphism kinds: inner (all groups) and transpose-inverse
/// (GL_d only); arbitrary compositions of those. Frobenius is trivial on
/// prime fields, so this covers the relevant desk-scale automorphisms.
template <class K>
struct GroupAutomorphism {
  enum class Kind { Inner, TransposeInverse, Composite };

  Kind kind;
  std::optional<GroupElement<K>> h;         // Inner only
  std::vector<GroupAutomorphism> parts;     // Composite only, applied right to left

  static GroupAutomorphism identity(const GroupSpec& spec) {
    return inner(identity_element<K>(spec));
  }
  static GroupAutomorphism inner(GroupElement<K> conj) {
    return GroupAutomorphism{Kind::Inner, std::move(conj), {}};
  }
  static GroupAutomorphism transpose_inverse() {
    return GroupAutomorphism{Kind::TransposeInverse, std::nullopt, {}};
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Inner: {
        std::string s = "inner:[";
        const Matrix<K>& m = h->mat;
        for (int i = 0; i < m.dim(); ++i) {
          if (i) s += ';';
          for (int j = 0; j < m.dim(); ++j) {
            if (j) s += ',';
            s += scalar_to_string(m.at(i, j));
          }
        }
        return s + "]";
      }
      case Kind::TransposeInverse:
        return "transpose-inverse";
      case Kind::Composite: {
        std::string s;
        for (const auto& part : parts) {
          if (!s.empty()) s += ';';
          s += part.to_string();
        }
        return s;
      }
    }
    throw error("bad automorphism kind");
  }
};

template <class K>
GroupElement<K> apply_automorphism(const GroupAutomorphism<K>& g, const GroupElement<K>& x) {
  using Kind = typename GroupAutomorphism<K>::Kind;
  switch (g.kind) {
    case Kind::Inner:
      return mul(mul(*g.h, x), inv(*g.h));
    case Kind::TransposeInverse: {
      if (x.spec.kind != GroupKind::GL)
        throw error("transpose-inverse is only an automorphism of GL_d here");
      return GroupElement<K>{x.spec, x.mat.transpose().inverse()};
    }
    case Kind::Composite: {
      GroupElement<K> out = x;
      for (auto it = g.parts.rbegin(); it != g.parts.rend(); ++it)
        out = apply_automorphism(*it, out);
      return out;
    }
  }
  throw error("bad automorphism kind");
}

/// (a . b)(x) = a(b(x)). Compositions are kept flat.
template <class K>
GroupAutomorphism<K> compose(const GroupAutomorphism<K>& a, const GroupAutomorphism<K>& b) {
  using Kind = typename GroupAutomorphism<K>::Kind;
  GroupAutomorphism<K> out{Kind::Composite, std::nullopt, {}};
  if (a.kind == Kind::Composite)
    out.parts.insert(out.parts.end(), a.parts.begin(), a.parts.end());
  else
    out.parts.push_back(a);
  if (b.kind == Kind::Composite)
    out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
  else
    out.parts.push_back(b);
  return out;
}

template <class K>
GroupAutomorphism<K> inverse_of(const GroupAutomorphism<K>& g) {
  using Kind = typename GroupAutomorphism<K>::Kind;
  switch (g.kind) {
    case Kind::Inner:
      return GroupAutomorphism<K>::inner(inv(*g.h));
    case Kind::TransposeInverse:
      return g;  // involution
    case Kind::Composite: {
      GroupAutomorphism<K> out{Kind::Composite, std::nullopt, {}};
      for (auto it = g.parts.rbegin(); it != g.parts.rend(); ++it)
        out.parts.push_back(inverse_of(*it));
      return out;
    }
  }
  throw error("bad automorphism kind");
}

/// Generating probe set: automorphisms agreeing on it are equal as maps.
/// SL2/PSL2: the two elementary transvections (their common centralizer is
/// the center). GL_d: all E_ij(1) plus diag(zeta, 1, ..., 1).
template <class K>
std::vector<GroupElement<K>> probe_set(const GroupSpec& spec) {
  std::vector<GroupElement<K>> probes;
  const K one = to_scalar<K>(spec, 1);
  const int d = spec.kind == GroupKind::GL ? spec.dim : 2;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      Matrix<K> m = Matrix<K>::identity(d, one);
      m.at(i, j) = one;
      probes.push_back(make_element(spec, std::move(m)));
    }
  if (spec.kind == GroupKind::GL) {
    Matrix<K> m = Matrix<K>::identity(d, one);
    m.at(0, 0) = to_scalar<K>(spec, primitive_root(spec.p));
    probes.push_back(make_element(spec, std::move(m)));
  }
  return probes;
}

namespace detail {
template <class K>
std::string action_key(const GroupAutomorphism<K>& g,
                       const std::vector<GroupElement<K>>& probes) {
  std::string key;
  for (const auto& x : probes) {
    const GroupElement<K> y = apply_automorphism(g, x);
    for (const K& e : y.mat.entries()) {
      key += scalar_to_string(e);
      key += ',';
    }
    key += '|';
  }
  return key;
}
}  // namespace detail

/// Finite subgroup of Aut(G), deduplicated by action on the probe set.
/// elements[0] is the identity; the list is closed under composition and
/// inverse and sorted by probe action for determinism.
template <class K>
struct AutSubgroupR {
  std::vector<GroupAutomorphism<K>> elements;

  std::size_t size() const { return elements.size(); }
};

template <class K>
AutSubgroupR<K> trivial_subgroup(const GroupSpec& spec) {
  return AutSubgroupR<K>{{GroupAutomorphism<K>::identity(spec)}};
}

/// Closure of the generators under composition; errors out when it grows
/// past the bound (e.g. for infinite-order inner automorphisms over Q).
template <class K>
AutSubgroupR<K> close_subgroup(const GroupSpec& spec,
                               const std::vector<GroupAutomorphism<K>>& generators,
                               std::size_t bound = 4096) {
  const auto probes = probe_set<K>(spec);
  std::map<std::string, GroupAutomorphism<K>> seen;
  const auto id = GroupAutomorphism<K>::identity(spec);
  const std::string id_key = detail::action_key(id, probes);
  seen.emplace(id_key, id);
  std::vector<GroupAutomorphism<K>> frontier{id};
  while (!frontier.empty()) {
    std::vector<GroupAutomorphism<K>> next;
    for (const auto& e : frontier)
      for (const auto& g : generators) {
        GroupAutomorphism<K> candidate = compose(g, e);
        std::string key = detail::action_key(candidate, probes);
        if (seen.count(key)) continue;
        if (seen.size() >= bound)
          throw error("automorphism subgroup closure exceeds bound " + std::to_string(bound));
        seen.emplace(std::move(key), candidate);
        next.push_back(std::move(candidate));
      }
    frontier = std::move(next);
  }
  AutSubgroupR<K> r;
  r.elements.reserve(seen.size());
  r.elements.push_back(seen.at(id_key));
  for (auto& [key, g] : seen)
    if (key != id_key) r.elements.push_back(std::move(g));
  return r;
}

// -- matrix literals ---------------------------------------------------------
//
// Row-major, rows separated by ';', entries by ',': "[1,1;0,1]". Entries are
// integers; over the rationals "num/den" is also accepted.

namespace detail {
template <class K>
K parse_entry(const GroupSpec& spec, const std::string& token, std::size_t pos);

template <>
inline Fp parse_entry<Fp>(const GroupSpec& spec, const std::string& token, std::size_t pos) {
  if (token.empty()) throw parse_error("empty matrix entry", pos);
  long long sign = 1, v = 0;
  std::size_t i = 0;
  if (token[0] == '-' || token[0] == '+') {
    sign = token[0] == '-' ? -1 : 1;
    i = 1;
  }
  if (i == token.size()) throw parse_error("empty matrix entry", pos);
  for (; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9')
      throw parse_error("bad matrix entry '" + token + "'", pos);
    v = v * 10 + (token[i] - '0');
    if (v > 1'000'000'000'000LL) throw parse_error("matrix entry too large", pos);
  }
  return Fp(sign * v, spec.p);
}

template <>
inline Rat parse_entry<Rat>(const GroupSpec&, const std::string& token, std::size_t pos) {
  if (token.empty()) throw parse_error("empty matrix entry", pos);
  for (char c : token)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw parse_error("bad matrix entry '" + token + "'", pos);
  try {
    return rat_from_string(token);
  } catch (const error&) {
    throw parse_error("bad matrix entry '" + token + "'", pos);
  }
}
}  // namespace detail

template <class K>
GroupElement<K> parse_matrix_literal(const std::string& text, const GroupSpec& spec) {
  if (text.empty() || text.front() != '[' || text.back() != ']')
    throw parse_error("matrix literal must be bracketed like [1,0;0,1]", 0);
  const std::string body = text.substr(1, text.size() - 2);
  std::vector<std::vector<K>> rows;
  std::vector<K> row;
  std::string token;
  std::size_t token_pos = 1;
  auto flush_entry = [&](std::size_t at) {
    row.push_back(detail::parse_entry<K>(spec, token, token_pos));
    token.clear();
    token_pos = at + 1;
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c == ',') {
      flush_entry(i + 1);
    } else if (c == ';') {
      flush_entry(i + 1);
      rows.push_back(std::move(row));
      row.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      if (token.empty()) token_pos = i + 1;
      token += c;
    }
  }
  flush_entry(body.size());
  rows.push_back(std::move(row));
  const int d = static_cast<int>(rows.size());
  std::vector<K> entries;
  entries.reserve(static_cast<std::size_t>(d) * d);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != d)
      throw parse_error("matrix literal is not square", 0);
    for (const K& x : r) entries.push_back(x);
  }
  return make_element(spec, Matrix<K>(d, std::move(entries)));
}

template <class K>
std::string format_matrix_literal(const GroupElement<K>& g) {
  std::string s = "[";
  for (int i = 0; i < g.mat.dim(); ++i) {
    if (i) s += ';';
    for (int j = 0; j < g.mat.dim(); ++j) {
      if (j) s += ',';
      s += scalar_to_string(g.mat.at(i, j));
    }
  }
  return s + "]";
}

// Group-automorphism spec grammar (for quotient subgroups in the CLI):
// `inner:<matrix literal>` | `transpose-inverse`, composed with ';' applied
// right to left; ';' inside '[...]' belongs to the matrix literal.
template <class K>
GroupAutomorphism<K> parse_group_auto_spec(const std::string& text, const GroupSpec& spec) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ';' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  std::optional<GroupAutomorphism<K>> out;
  for (const std::string& raw : parts) {
    std::string part = raw;
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.erase(part.begin());
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.pop_back();
    GroupAutomorphism<K> factor = GroupAutomorphism<K>::identity(spec);
    if (part.rfind("inner:", 0) == 0)
      factor = GroupAutomorphism<K>::inner(parse_matrix_literal<K>(part.substr(6), spec));
    else if (part == "transpose-inverse" || part == "ti")
      factor = GroupAutomorphism<K>::transpose_inverse();
    else
      throw parse_error("unknown group automorphism spec '" + part + "'", 0);
    out = out ? compose(*out, factor) : factor;
  }
  return *out;
}

}  // namespace repvar
