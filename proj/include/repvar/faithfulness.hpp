#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repvar/autf.hpp"
#include "repvar/common.hpp"
#include "repvar/freegroup.hpp"
#include "repvar/groups.hpp"
#include "repvar/rng.hpp"
#include "repvar/variety.hpp"

namespace repvar {

// Verdicts carry their witness, and the witness is re-verified before the
// verdict is returned: a NotIdentity or NotInKernel result is a
// self-checking certificate. A single finite-field witness is already
// conclusive over the algebraic closure, so sampling can certify "acts
// nontrivially" but never "acts trivially"; the definite InKernel verdict
// is reserved for exhaustive runs.

/// Outcome of randomized word-identity testing on G^n.
template <class K>
struct IdentityVerdict {
  std::optional<Point<K>> witness;  // evaluate_word(w, witness) != e
  long long trials;

  bool not_identity() const { return witness.has_value(); }
};

enum class KernelVerdictKind { NotInKernel, InKernel, Undetermined };

/// Outcome of testing whether sigma acts trivially on X//R.
template <class K>
struct KernelVerdict {
  KernelVerdictKind kind;
  std::optional<Point<K>> witness;  // orbit(sigma_X(x)) != orbit(x)
  long long trials;
  bool exhaustive = false;
};

/// Membership in X_{w,gamma,i} = { x : w(x) = gamma(x_i) }.
template <class K>
bool membership_X_w_gamma_i(const Point<K>& x, const Word& w, const GroupAutomorphism<K>& gamma,
                            int i) {
  if (i < 1 || i > x.arity()) throw error("coordinate index out of range");
  return evaluate_word(w, x) ==
         apply_automorphism(gamma, x.coords[static_cast<std::size_t>(i - 1)]);
}

/// x lies in the locus { sigma_X(x) = gamma_X(x) }, i.e. in the
/// intersection of the n membership sets X_{sigma(f_i), gamma, i}.
template <class K>
bool in_kernel_locus(const Point<K>& x, const Endomorphism& sigma,
                     const GroupAutomorphism<K>& gamma) {
  if (sigma.rank() != x.arity()) throw error("endomorphism rank does not match point arity");
  for (int i = 1; i <= sigma.rank(); ++i)
    if (!membership_X_w_gamma_i(x, sigma.image(i), gamma, i)) return false;
  return true;
}

namespace detail {
template <class K>
Point<K> sample_point(const GroupDomain& dom, int n, Rng& rng) {
  std::vector<GroupElement<K>> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) coords.push_back(random_domain_element(dom, rng));
  return Point<K>{dom.spec, std::move(coords)};
}
}  // namespace detail

/// Search for a point with w(x) != e. Each trial draws from its own
/// derived stream, so the verdict depends only on (word, domain, trials,
/// seed) and not on execution order or worker count.
inline IdentityVerdict<Fp> word_identity_test(const Word& w, const GroupDomain& dom,
                                              long long trials, std::uint64_t seed) {
  if (trials < 1) throw error("trials must be positive");
  if (!dom.spec.finite_field()) throw error("identity testing needs a finite group");
  const GroupElement<Fp> e = identity_element<Fp>(dom.spec);
  for (long long t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, 0x1d, static_cast<std::uint64_t>(t)));
    const Point<Fp> x = detail::sample_point<Fp>(dom, w.rank(), rng);
    if (!(evaluate_word(w, x) == e)) return IdentityVerdict<Fp>{x, t + 1};
  }
  return IdentityVerdict<Fp>{std::nullopt, trials};
}

/// delta_1 = [x1, x2]; delta_{k+1} = [delta_k(first half), delta_k(second
/// half)] on 2^{k+1} fresh variables. delta_k vanishes identically on every
/// solvable group of derived length <= k, and is freely reduced of length
/// 4^k (the nested commutators never cancel).
inline Word derived_identity_word(int k) {
  if (k < 1) throw error("derived word index must be >= 1");
  const int n = 1 << k;
  Word d = commutator(Word::generator(2, 1), Word::generator(2, 2));
  for (int level = 2; level <= k; ++level) {
    const int half = 1 << (level - 1);
    const Word a = shift_generators(d, 0, 2 * half);
    const Word b = shift_generators(d, half, 2 * half);
    d = commutator(a, b);
  }
  if (d.rank() != n) throw error("derived word construction is inconsistent");
  return d;
}

/// r(x1^d, x2^d, ...): replace each letter f_i^{+-1} by f_i^{+-d}.
inline Word power_substitute(const Word& w, long long d) {
  if (d < 1) throw error("power substitution needs d >= 1");
  std::vector<Letter> raw;
  raw.reserve(w.length() * static_cast<std::size_t>(d));
  for (const Letter& l : w.letters())
    for (long long k = 0; k < d; ++k) raw.push_back(l);
  return Word::reduce(w.rank(), raw);
}

/// Sample points until one moves to a different R-orbit under sigma_X.
/// A verified witness certifies that sigma acts nontrivially on X//R.
inline KernelVerdict<Fp> kernel_witness_search(const AutElement& sigma, const GroupDomain& dom,
                                               const AutSubgroupR<Fp>& r, int n, long long trials,
                                               std::uint64_t seed) {
  if (!dom.spec.finite_field()) throw error("kernel search needs a finite group");
  for (long long t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, 0x4b, static_cast<std::uint64_t>(t)));
    const Point<Fp> x = detail::sample_point<Fp>(dom, n, rng);
    const OrbitRep<Fp> before = orbit(x, r);
    const OrbitRep<Fp> after = orbit(sigma_X(sigma.forward(), x), r);
    if (!(after == before)) return KernelVerdict<Fp>{KernelVerdictKind::NotInKernel, x, t + 1};
  }
  return KernelVerdict<Fp>{KernelVerdictKind::Undetermined, std::nullopt, trials};
}

/// Decide kernel membership by checking that every R-orbit is
/// sigma_X-invariant, over all of domain^n.
inline KernelVerdict<Fp> kernel_member_exhaustive(const AutElement& sigma, const GroupDomain& dom,
                                                  const AutSubgroupR<Fp>& r, int n,
                                                  long long bound = 1'000'000) {
  PointEnumerator points(dom, n, bound);
  long long seen = 0;
  for (auto x = points.next(); x; x = points.next()) {
    ++seen;
    const OrbitRep<Fp> before = orbit(*x, r);
    const OrbitRep<Fp> after = orbit(sigma_X(sigma.forward(), *x), r);
    if (!(after == before))
      return KernelVerdict<Fp>{KernelVerdictKind::NotInKernel, *x, seen, true};
  }
  return KernelVerdict<Fp>{KernelVerdictKind::InKernel, std::nullopt, seen, true};
}

/// One row of a faithfulness report.
struct FaithfulnessEntry {
  std::string name;
  KernelVerdict<Fp> verdict;
  std::uint64_t seed;
};

struct FaithfulnessReport {
  GroupDomain domain;
  int n;
  long long subgroup_size;
  std::vector<FaithfulnessEntry> entries;

  /// True when no entry is Undetermined (InKernel from an exhaustive run
  /// is a definite answer, not a missing certificate).
  bool all_certified() const {
    for (const auto& e : entries)
      if (e.verdict.kind == KernelVerdictKind::Undetermined) return false;
    return true;
  }
};

/// Run the kernel test for each named automorphism. Each entry gets its
/// own derived seed, recorded for replay.
inline FaithfulnessReport faithfulness_report(
    const GroupDomain& dom, const AutSubgroupR<Fp>& r, int n,
    const std::vector<std::pair<std::string, AutElement>>& autos, long long trials,
    std::uint64_t seed, bool exhaustive = false, long long bound = 1'000'000) {
  FaithfulnessReport report{dom, n, static_cast<long long>(r.size()), {}};
  for (std::size_t i = 0; i < autos.size(); ++i) {
    const std::uint64_t entry_seed = derive_seed(seed, 0xfa, i);
    KernelVerdict<Fp> verdict =
        exhaustive ? kernel_member_exhaustive(autos[i].second, dom, r, n, bound)
                   : kernel_witness_search(autos[i].second, dom, r, n, trials, entry_seed);
    if (verdict.kind == KernelVerdictKind::NotInKernel) {
      // re-verify the certificate before shipping it
      const OrbitRep<Fp> before = orbit(*verdict.witness, r);
      const OrbitRep<Fp> after = orbit(sigma_X(autos[i].second.forward(), *verdict.witness), r);
      if (after == before) throw error("witness failed re-verification (internal)");
    }
    report.entries.push_back(FaithfulnessEntry{autos[i].first, std::move(verdict), entry_seed});
  }
  return report;
}

}  // namespace repvar
