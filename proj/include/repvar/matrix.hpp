#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "repvar/common.hpp"
#include "repvar/scalar.hpp"

namespace repvar {

/// Dense d x d matrix over an exact field scalar K (Fp or Rat).
template <class K>
class Matrix {
 public:
  Matrix(int d, std::vector<K> entries) : d_(d), a_(std::move(entries)) {
    if (d < 1 || a_.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d))
      throw error("matrix entry count does not match dimension");
  }

  static Matrix identity(int d, const K& one) {
    const K zero = one - one;
    std::vector<K> e(static_cast<std::size_t>(d) * d, zero);
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i) * d + i] = one;
    return Matrix(d, std::move(e));
  }

  int dim() const { return d_; }
  const K& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * d_ + j]; }
  K& at(int i, int j) { return a_[static_cast<std::size_t>(i) * d_ + j]; }
  const std::vector<K>& entries() const { return a_; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.d_ != y.d_) throw error("matrix dimension mismatch");
    const int d = x.d_;
    std::vector<K> out;
    out.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        K s = x.at(i, 0) * y.at(0, j);
        for (int k = 1; k < d; ++k) s = s + x.at(i, k) * y.at(k, j);
        out.push_back(std::move(s));
      }
    return Matrix(d, std::move(out));
  }

  Matrix transpose() const {
    std::vector<K> out;
    out.reserve(a_.size());
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) out.push_back(at(j, i));
    return Matrix(d_, std::move(out));
  }

  Matrix negate() const {
    std::vector<K> out;
    out.reserve(a_.size());
    for (const K& x : a_) out.push_back(-x);
    return Matrix(d_, std::move(out));
  }

  K det() const {
    if (d_ == 1) return at(0, 0);
    if (d_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    // Gaussian elimination with exact division; K is a field.
    Matrix m = *this;
    const K zero = at(0, 0) - at(0, 0);
    bool negate_sign = false;
    K result = zero;
    bool first = true;
    for (int col = 0; col < d_; ++col) {
      int pivot = -1;
      for (int row = col; row < d_; ++row)
        if (!scalar_is_zero(m.at(row, col))) {
          pivot = row;
          break;
        }
      if (pivot < 0) return zero;
      if (pivot != col) {
        for (int j = 0; j < d_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
        negate_sign = !negate_sign;
      }
      const K piv = m.at(col, col);
      result = first ? piv : result * piv;
      first = false;
      const K piv_inv = scalar_inverse(piv);
      for (int row = col + 1; row < d_; ++row) {
        if (scalar_is_zero(m.at(row, col))) continue;
        const K factor = m.at(row, col) * piv_inv;
        for (int j = col; j < d_; ++j)
          m.at(row, j) = m.at(row, j) - factor * m.at(col, j);
      }
    }
    return negate_sign ? -result : result;
  }

  /// Gauss-Jordan inverse; throws if singular. 2x2 uses the adjugate.
  Matrix inverse() const {
    if (d_ == 2) {
      const K dt = det();
      if (scalar_is_zero(dt)) throw error("matrix not invertible");
      const K di = scalar_inverse(dt);
      std::vector<K> out = {at(1, 1) * di, -at(0, 1) * di, -at(1, 0) * di, at(0, 0) * di};
      return Matrix(2, std::move(out));
    }
    const K* nonzero = nullptr;
    for (const K& x : a_)
      if (!scalar_is_zero(x)) {
        nonzero = &x;
        break;
      }
    if (!nonzero) throw error("matrix not invertible");
    const K one = *nonzero * scalar_inverse(*nonzero);
    Matrix m = *this;
    Matrix inv = identity(d_, one);
    for (int col = 0; col < d_; ++col) {
      int pivot = -1;
      for (int row = col; row < d_; ++row)
        if (!scalar_is_zero(m.at(row, col))) {
          pivot = row;
          break;
        }
      if (pivot < 0) throw error("matrix not invertible");
      if (pivot != col)
        for (int j = 0; j < d_; ++j) {
          std::swap(m.at(pivot, j), m.at(col, j));
          std::swap(inv.at(pivot, j), inv.at(col, j));
        }
      const K piv_inv = scalar_inverse(m.at(col, col));
      for (int j = 0; j < d_; ++j) {
        m.at(col, j) = m.at(col, j) * piv_inv;
        inv.at(col, j) = inv.at(col, j) * piv_inv;
      }
      for (int row = 0; row < d_; ++row) {
        if (row == col || scalar_is_zero(m.at(row, col))) continue;
        const K factor = m.at(row, col);
        for (int j = 0; j < d_; ++j) {
          m.at(row, j) = m.at(row, j) - factor * m.at(col, j);
          inv.at(row, j) = inv.at(row, j) - factor * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.d_ != y.d_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (scalar_compare(x.a_[i], y.a_[i]) != 0) return false;
    return true;
  }

 private:
  int d_;
  std::vector<K> a_;
};

/// Lexicographic order on entries in reading order; total, and consistent
/// with equality for canonicalized elements.
template <class K>
int matrix_compare(const Matrix<K>& x, const Matrix<K>& y) {
  if (x.dim() != y.dim()) return x.dim() < y.dim() ? -1 : 1;
  for (std::size_t i = 0; i < x.entries().size(); ++i) {
    const int c = scalar_compare(x.entries()[i], y.entries()[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace repvar
