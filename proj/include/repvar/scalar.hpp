#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "repvar/common.hpp"

namespace repvar {

/// Exact rational scalar (arbitrary precision, always normalized).
using Rat = boost::multiprecision::cpp_rational;

/// Residue mod an odd prime p, canonical representative in 0..p-1.
/// The modulus travels with the value; mixing moduli is an error.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long v, long long p) : p_(p) {
    if (p < 2) throw error("modulus must be >= 2");
    v_ = v % p;
    if (v_ < 0) v_ += p;
  }

  long long value() const { return v_; }
  long long modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.match(b);
    return Fp(a.v_ + b.v_, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.match(b);
    return Fp(a.v_ - b.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.match(b);
    return Fp(a.v_ * b.v_, a.p_);
  }
  Fp operator-() const { return Fp(-v_, p_); }

  /// Multiplicative inverse by extended Euclid; requires gcd(v, p) = 1.
  Fp inverse() const {
    long long t = 0, new_t = 1, r = p_, new_r = v_;
    while (new_r != 0) {
      const long long q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (r != 1) throw error("element not invertible mod " + std::to_string(p_));
    return Fp(t, p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.match(b);
    return a.v_ == b.v_;
  }
  friend auto operator<=>(const Fp& a, const Fp& b) {
    a.match(b);
    return a.v_ <=> b.v_;
  }

 private:
  void match(const Fp& o) const {
    if (p_ != o.p_) throw error("mixed moduli " + std::to_string(p_) + " and " +
                                std::to_string(o.p_));
  }

  long long v_;
  long long p_;
};

// Overloads shared by the generic matrix/group code.

inline bool scalar_is_zero(const Fp& x) { return x.value() == 0; }
inline bool scalar_is_zero(const Rat& x) { return x == 0; }

inline Fp scalar_inverse(const Fp& x) { return x.inverse(); }
inline Rat scalar_inverse(const Rat& x) {
  if (x == 0) throw error("division by zero");
  return Rat(1) / x;
}

inline int scalar_compare(const Fp& a, const Fp& b) {
  return a.value() < b.value() ? -1 : (a.value() == b.value() ? 0 : 1);
}
inline int scalar_compare(const Rat& a, const Rat& b) {
  return a < b ? -1 : (a == b ? 0 : 1);
}

inline std::string scalar_to_string(const Fp& x) { return std::to_string(x.value()); }
inline std::string scalar_to_string(const Rat& x) { return x.str(); }

/// Parse "123", "-4" or "num/den" (rationals only for Rat).
inline Rat rat_from_string(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw error("bad rational literal '" + s + "'");
  }
}

}  // namespace repvar
