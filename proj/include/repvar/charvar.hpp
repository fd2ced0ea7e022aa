#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repvar/autf.hpp"
#include "repvar/common.hpp"
#include "repvar/freegroup.hpp"
#include "repvar/groups.hpp"
#include "repvar/variety.hpp"

namespace repvar {

// Horowitz trace coordinates for rank <= 3: the traces of products of
// distinct generators in increasing order generate the ring of trace
// functions, so every word trace is an integer polynomial in
//   x1, x2, x3, x12, x13, x23, x123.

constexpr int kTraceVarCount = 7;

inline const char* trace_var_name(int v) {
  static const char* names[kTraceVarCount] = {"x1", "x2", "x3", "x12", "x13", "x23", "x123"};
  if (v < 0 || v >= kTraceVarCount) throw error("trace variable index out of range");
  return names[v];
}

/// Generator index set of a trace variable, increasing.
inline const std::vector<int>& trace_var_gens(int v) {
  static const std::vector<int> gens[kTraceVarCount] = {
      {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  if (v < 0 || v >= kTraceVarCount) throw error("trace variable index out of range");
  return gens[v];
}

inline int trace_var_of_gens(const std::vector<int>& gens) {
  for (int v = 0; v < kTraceVarCount; ++v)
    if (trace_var_gens(v) == gens) return v;
  throw error("no trace variable for the given generator set");
}

/// The variables available at a given rank (1, 3 or 7 of them).
inline std::vector<int> trace_vars_for_rank(int n) {
  if (n < 1 || n > 3) throw error("trace coordinates cover rank 1..3 only");
  std::vector<int> vars;
  for (int v = 0; v < kTraceVarCount; ++v) {
    bool ok = true;
    for (int g : trace_var_gens(v)) ok = ok && g <= n;
    if (ok) vars.push_back(v);
  }
  return vars;
}

/// Word whose trace the variable denotes: the product of its generators.
inline Word trace_basis_word(int v, int rank) {
  Word w(rank);
  for (int g : trace_var_gens(v)) w = multiply(w, Word::generator(rank, g));
  return w;
}

using TraceMono = std::array<std::uint8_t, kTraceVarCount>;

namespace detail {
inline int mono_max_exp(const TraceMono& m) {
  int e = 0;
  for (auto x : m) e = x > e ? x : e;
  return e;
}
}  // namespace detail

/// Canonical term order, chosen to reproduce the classical way these
/// polynomials are written (x1^2 + x2^2 + x12^2 - x1*x2*x12 - 2): higher
/// maximal exponent first, ties broken lexicographically with x1 most
/// significant.
struct TraceTermOrder {
  bool operator()(const TraceMono& a, const TraceMono& b) const {
    const int ea = detail::mono_max_exp(a), eb = detail::mono_max_exp(b);
    if (ea != eb) return ea > eb;
    return a > b;  // lex, larger exponent vector first
  }
};

/// Integer-coefficient polynomial in the trace coordinates, kept in
/// canonical sorted form with no zero terms.
class TracePolynomial {
 public:
  TracePolynomial() = default;

  static TracePolynomial constant(long long c) {
    TracePolynomial p;
    if (c != 0) p.terms_.emplace(TraceMono{}, c);
    return p;
  }

  static TracePolynomial variable(int v) {
    if (v < 0 || v >= kTraceVarCount) throw error("trace variable index out of range");
    TraceMono m{};
    m[static_cast<std::size_t>(v)] = 1;
    TracePolynomial p;
    p.terms_.emplace(m, 1);
    return p;
  }

  const std::map<TraceMono, long long, TraceTermOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  friend TracePolynomial operator+(const TracePolynomial& a, const TracePolynomial& b) {
    TracePolynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend TracePolynomial operator-(const TracePolynomial& a, const TracePolynomial& b) {
    TracePolynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }

  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
    TracePolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        TraceMono m{};
        for (int i = 0; i < kTraceVarCount; ++i) {
          const int e = ma[static_cast<std::size_t>(i)] + mb[static_cast<std::size_t>(i)];
          if (e > 200) throw error("trace polynomial degree overflow");
          m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
        }
        out.add_term(m, ca * cb);
      }
    return out;
  }

  /// Canonical text: terms in canonical order, " + "/" - " separators,
  /// "^" powers, "*" products, unit coefficients omitted.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      const bool first = out.empty();
      const long long mag = c < 0 ? -c : c;
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      std::string factors;
      for (int v = 0; v < kTraceVarCount; ++v) {
        const int e = m[static_cast<std::size_t>(v)];
        if (e == 0) continue;
        if (!factors.empty()) factors += '*';
        factors += trace_var_name(v);
        if (e > 1) factors += '^' + std::to_string(e);
      }
      if (factors.empty()) {
        out += std::to_string(mag);
      } else {
        if (mag != 1) out += std::to_string(mag) + "*";
        out += factors;
      }
    }
    return out;
  }

  /// Exact evaluation at given variable values.
  template <class K>
  K evaluate(const std::array<K, kTraceVarCount>& values, const GroupSpec& spec) const {
    K acc = to_scalar<K>(spec, 0);
    for (const auto& [m, c] : terms_) {
      K term = to_scalar<K>(spec, c);
      for (int v = 0; v < kTraceVarCount; ++v)
        for (int e = 0; e < m[static_cast<std::size_t>(v)]; ++e)
          term = term * values[static_cast<std::size_t>(v)];
      acc = acc + term;
    }
    return acc;
  }

  /// Replace every variable by its image polynomial.
  TracePolynomial substitute(const std::map<int, TracePolynomial>& images) const {
    TracePolynomial out;
    for (const auto& [m, c] : terms_) {
      TracePolynomial term = constant(c);
      for (int v = 0; v < kTraceVarCount; ++v) {
        const int e = m[static_cast<std::size_t>(v)];
        if (e == 0) continue;
        const auto it = images.find(v);
        if (it == images.end())
          throw error(std::string("no substitution image for ") + trace_var_name(v));
        for (int k = 0; k < e; ++k) term = term * it->second;
      }
      out = out + term;
    }
    return out;
  }

 private:
  void add_term(const TraceMono& m, long long c) {
    const auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<TraceMono, long long, TraceTermOrder> terms_;
};

// -- Fricke reduction ----------------------------------------------------------
//
// tr is invariant under cyclic rotation, inversion and conjugation, with
//   tr(e) = 2,   tr(UV) = tr(U)tr(V) - tr(UV^{-1}).
// The reduction applies, after cyclic reduction:
//   (1) tr(P a^{-1}) = tr(a) tr(P) - tr(P a)      [remove a negative letter]
//   (2) tr(gA gB)    = tr(gA) tr(gB) - tr(A B^{-1}) [split a repeated generator]
// Both branches shrink (length, #negative letters) lexicographically, so the
// recursion reaches words with distinct positive letters. Up to rotation
// those are the basis words plus the reversed triple, which expands as
//   tr(g1 g3 g2) = x1 x23 + x2 x13 + x3 x12 - x1 x2 x3 - x123.

namespace detail {

using LetterSeq = std::vector<Letter>;

inline LetterSeq seq_of(const Word& w) { return w.letters(); }

inline std::uint32_t letter_code(const Letter& l) {
  return static_cast<std::uint32_t>(l.gen) << 1 | (l.sign < 0 ? 1u : 0u);
}

inline bool rotation_less(const LetterSeq& s, std::size_t i, std::size_t j) {
  // compare rotation starting at i with rotation starting at j
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint32_t a = letter_code(s[(i + k) % n]);
    const std::uint32_t b = letter_code(s[(j + k) % n]);
    if (a != b) return a < b;
  }
  return false;
}

inline LetterSeq min_rotation(const LetterSeq& s) {
  if (s.empty()) return s;
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (rotation_less(s, i, best)) best = i;
  LetterSeq out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back(s[(best + k) % s.size()]);
  return out;
}

inline LetterSeq inverse_seq(const LetterSeq& s) {
  LetterSeq out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

inline bool seq_less(const LetterSeq& a, const LetterSeq& b) {
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    const auto ca = letter_code(a[k]), cb = letter_code(b[k]);
    if (ca != cb) return ca < cb;
  }
  return a.size() < b.size();
}

struct TraceReducer {
  int rank;
  std::map<LetterSeq, TracePolynomial> memo;
  long long steps = 0;
  static constexpr long long kStepBudget = 2'000'000;

  TracePolynomial run(const LetterSeq& raw) {
    // free + cyclic reduction, then canonical rotation (trace-invariant)
    const Word reduced = Word::reduce(rank, raw);
    const auto [core, conj] = cyclically_reduce(reduced);
    (void)conj;
    LetterSeq s = min_rotation(core.letters());

    if (s.empty()) return TracePolynomial::constant(2);
    if (s.size() == 1) return TracePolynomial::variable(trace_var_of_gens({s[0].gen}));

    const LetterSeq key = std::min(s, min_rotation(inverse_seq(s)), seq_less);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    if (++steps > kStepBudget)
      throw error("trace reduction step budget exceeded (internal)");

    const TracePolynomial result = reduce_core(s);
    memo.emplace(key, result);
    return result;
  }

  TracePolynomial reduce_core(const LetterSeq& s) {
    const std::size_t n = s.size();

    // (1) negative letter: rotate it to the end
    for (std::size_t i = n; i-- > 0;) {
      if (s[i].sign > 0) continue;
      LetterSeq rot;
      rot.reserve(n);
      for (std::size_t k = 1; k <= n; ++k) rot.push_back(s[(i + k) % n]);
      const int a = rot.back().gen;
      LetterSeq p(rot.begin(), rot.end() - 1);
      LetterSeq pa = p;
      pa.push_back(Letter{a, +1});
      return TracePolynomial::variable(trace_var_of_gens({a})) * run(p) - run(pa);
    }

    // (2) split at the highest repeated generator
    std::array<int, 4> count{};
    for (const Letter& l : s) ++count[static_cast<std::size_t>(l.gen)];
    for (int g = 3; g >= 1; --g) {
      if (count[static_cast<std::size_t>(g)] < 2) continue;
      std::size_t first = n;
      for (std::size_t i = 0; i < n; ++i)
        if (s[i].gen == g) {
          first = i;
          break;
        }
      LetterSeq rot;
      rot.reserve(n);
      for (std::size_t k = 0; k < n; ++k) rot.push_back(s[(first + k) % n]);
      std::size_t second = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (rot[i].gen == g) {
          second = i;
          break;
        }
      LetterSeq ga(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(second));
      LetterSeq gb(rot.begin() + static_cast<std::ptrdiff_t>(second), rot.end());
      LetterSeq ab;  // A * B^{-1}
      ab.insert(ab.end(), rot.begin() + 1, rot.begin() + static_cast<std::ptrdiff_t>(second));
      const LetterSeq b_tail(rot.begin() + static_cast<std::ptrdiff_t>(second) + 1, rot.end());
      const LetterSeq b_inv = inverse_seq(b_tail);
      ab.insert(ab.end(), b_inv.begin(), b_inv.end());
      return run(ga) * run(gb) - run(ab);
    }

    // distinct positive letters, length 2 or 3
    if (n == 2) {
      const int i = std::min(s[0].gen, s[1].gen), j = std::max(s[0].gen, s[1].gen);
      return TracePolynomial::variable(trace_var_of_gens({i, j}));
    }
    if (n == 3) {
      std::size_t start = 0;
      for (std::size_t i = 1; i < 3; ++i)
        if (s[i].gen < s[start].gen) start = i;
      const int a = s[start].gen, b = s[(start + 1) % 3].gen, c = s[(start + 2) % 3].gen;
      if (b < c) return TracePolynomial::variable(trace_var_of_gens({a, b, c}));
      // reversed cyclic order: the three-generator Fricke expansion
      const auto x1 = TracePolynomial::variable(0);
      const auto x2 = TracePolynomial::variable(1);
      const auto x3 = TracePolynomial::variable(2);
      const auto x12 = TracePolynomial::variable(3);
      const auto x13 = TracePolynomial::variable(4);
      const auto x23 = TracePolynomial::variable(5);
      const auto x123 = TracePolynomial::variable(6);
      return x1 * x23 + x2 * x13 + x3 * x12 - x1 * x2 * x3 - x123;
    }
    throw error("trace reduction reached an impossible state (internal)");
  }
};

}  // namespace detail

/// Integer trace polynomial of w: evaluating it at the traces of the basis
/// words of any SL2 point (odd characteristic or characteristic zero)
/// gives the trace of w at that point.
inline TracePolynomial trace_polynomial(const Word& w) {
  if (w.rank() < 1 || w.rank() > 3)
    throw error("trace polynomials are provided for rank 1..3 only");
  detail::TraceReducer reducer{w.rank(), {}, 0};
  return reducer.run(w.letters());
}

/// tr(w(x)) for an SL2 point of any rank; the numeric oracle the symbolic
/// reduction is checked against.
template <class K>
K numeric_trace(const Word& w, const Point<K>& x) {
  if (x.spec.kind != GroupKind::SL2) throw error("numeric_trace needs an SL2 point");
  const GroupElement<K> g = evaluate_word(w, x);
  return g.mat.at(0, 0) + g.mat.at(1, 1);
}

/// Traces of all basis words at a point, for evaluating trace polynomials.
template <class K>
std::array<K, kTraceVarCount> numeric_basis_traces(const Point<K>& x) {
  std::array<K, kTraceVarCount> values{};
  for (int v = 0; v < kTraceVarCount; ++v) {
    bool in_rank = true;
    for (int g : trace_var_gens(v)) in_rank = in_rank && g <= x.arity();
    values[static_cast<std::size_t>(v)] =
        in_rank ? numeric_trace(trace_basis_word(v, x.arity()), x) : to_scalar<K>(x.spec, 0);
  }
  return values;
}

/// The polynomial substitution induced on trace coordinates by sigma:
/// variable for the basis word u maps to the trace polynomial of
/// sigma(u). Contravariant: induced(compose(s,t)) = induced(t) followed by
/// substituting induced(s).
inline std::map<int, TracePolynomial> induced_action(const AutElement& sigma, int n) {
  if (n < 1 || n > 3) throw error("trace coordinates cover rank 1..3 only");
  if (sigma.rank() != n) throw error("automorphism rank mismatch");
  std::map<int, TracePolynomial> images;
  for (int v : trace_vars_for_rank(n))
    images.emplace(v, trace_polynomial(apply(sigma.forward(), trace_basis_word(v, n))));
  return images;
}

/// Identity substitution on the rank-n variables.
inline std::map<int, TracePolynomial> identity_trace_substitution(int n) {
  std::map<int, TracePolynomial> images;
  for (int v : trace_vars_for_rank(n)) images.emplace(v, TracePolynomial::variable(v));
  return images;
}

}  // namespace repvar
