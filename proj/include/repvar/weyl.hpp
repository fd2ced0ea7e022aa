#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "repvar/common.hpp"
#include "repvar/matrix.hpp"
#include "repvar/scalar.hpp"

namespace repvar {

enum class SimpleType { A, B, C, D, E, F, G };

inline char simple_type_letter(SimpleType t) {
  switch (t) {
    case SimpleType::A: return 'A';
    case SimpleType::B: return 'B';
    case SimpleType::C: return 'C';
    case SimpleType::D: return 'D';
    case SimpleType::E: return 'E';
    case SimpleType::F: return 'F';
    case SimpleType::G: return 'G';
  }
  throw error("bad simple type");
}

/// Simple root system in its standard rational realization (Bourbaki
/// coordinates; G2 lives in the sum-zero plane of Q^3, so everything stays
/// rational).
struct RootSystem {
  SimpleType type;
  int rank;
  int ambient;
  std::vector<std::vector<Rat>> simple_roots;    // rank vectors in Q^ambient
  std::vector<std::vector<long long>> cartan;    // cartan[i][j] = 2(a_i,a_j)/(a_j,a_j)

  std::string name() const { return simple_type_letter(type) + std::to_string(rank); }
};

namespace detail {
inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::vector<Rat> unit_vec(int dim, int i, const Rat& c = Rat(1)) {
  std::vector<Rat> v(static_cast<std::size_t>(dim), Rat(0));
  v[static_cast<std::size_t>(i)] = c;
  return v;
}
}  // namespace detail

inline RootSystem make_root_system(SimpleType type, int rank) {
  using detail::unit_vec;
  if (rank < 1 || rank > 64) throw error("rank out of range");
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  auto e = [&](int i) { return unit_vec(rs.ambient, i); };
  switch (type) {
    case SimpleType::A: {
      rs.ambient = rank + 1;
      for (int i = 0; i < rank; ++i) {
        auto v = e(i);
        v[static_cast<std::size_t>(i + 1)] = Rat(-1);
        rs.simple_roots.push_back(std::move(v));
      }
      break;
    }
    case SimpleType::B:
    case SimpleType::C: {
      if (rank < 2) throw error("types B and C need rank >= 2");
      rs.ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        auto v = e(i);
        v[static_cast<std::size_t>(i + 1)] = Rat(-1);
        rs.simple_roots.push_back(std::move(v));
      }
      rs.simple_roots.push_back(
          unit_vec(rs.ambient, rank - 1, type == SimpleType::B ? Rat(1) : Rat(2)));
      break;
    }
    case SimpleType::D: {
      if (rank < 3) throw error("type D needs rank >= 3");
      rs.ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        auto v = e(i);
        v[static_cast<std::size_t>(i + 1)] = Rat(-1);
        rs.simple_roots.push_back(std::move(v));
      }
      auto v = e(rank - 2);
      v[static_cast<std::size_t>(rank - 1)] = Rat(1);
      rs.simple_roots.push_back(std::move(v));
      break;
    }
    case SimpleType::E: {
      if (rank < 6 || rank > 8) throw error("type E needs rank 6, 7 or 8");
      rs.ambient = 8;
      std::vector<Rat> a1(8, Rat(-1) / 2);
      a1[0] = Rat(1) / 2;
      a1[7] = Rat(1) / 2;
      rs.simple_roots.push_back(std::move(a1));
      auto a2 = e(0);
      a2[1] = Rat(1);
      rs.simple_roots.push_back(std::move(a2));
      for (int i = 3; i <= rank; ++i) {
        auto v = e(i - 2);
        v[static_cast<std::size_t>(i - 3)] = Rat(-1);
        rs.simple_roots.push_back(std::move(v));
      }
      break;
    }
    case SimpleType::F: {
      if (rank != 4) throw error("type F needs rank 4");
      rs.ambient = 4;
      auto a1 = e(1);
      a1[2] = Rat(-1);
      auto a2 = e(2);
      a2[3] = Rat(-1);
      auto a3 = e(3);
      std::vector<Rat> a4 = {Rat(1) / 2, Rat(-1) / 2, Rat(-1) / 2, Rat(-1) / 2};
      rs.simple_roots = {a1, a2, a3, a4};
      break;
    }
    case SimpleType::G: {
      if (rank != 2) throw error("type G needs rank 2");
      rs.ambient = 3;
      auto a1 = e(0);
      a1[1] = Rat(-1);
      std::vector<Rat> a2 = {Rat(-2), Rat(1), Rat(1)};
      rs.simple_roots = {a1, a2};
      break;
    }
  }
  // Cartan matrix from the realization; entries must come out integral.
  rs.cartan.assign(static_cast<std::size_t>(rank),
                   std::vector<long long>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const Rat c = 2 * detail::dot(rs.simple_roots[static_cast<std::size_t>(i)],
                                    rs.simple_roots[static_cast<std::size_t>(j)]) /
                    detail::dot(rs.simple_roots[static_cast<std::size_t>(j)],
                                rs.simple_roots[static_cast<std::size_t>(j)]);
      if (denominator(c) != 1) throw error("non-integral Cartan entry (internal)");
      rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<long long>(numerator(c));
    }
  return rs;
}

/// "A2", "D5", "E6" ...
inline std::pair<SimpleType, int> parse_simple_type(const std::string& token) {
  if (token.size() < 2) throw parse_error("bad type token '" + token + "'", 0);
  SimpleType t;
  switch (token[0]) {
    case 'A': t = SimpleType::A; break;
    case 'B': t = SimpleType::B; break;
    case 'C': t = SimpleType::C; break;
    case 'D': t = SimpleType::D; break;
    case 'E': t = SimpleType::E; break;
    case 'F': t = SimpleType::F; break;
    case 'G': t = SimpleType::G; break;
    default:
      throw parse_error("bad type letter in '" + token + "'", 0);
  }
  long long rank = 0;
  for (std::size_t i = 1; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9')
      throw parse_error("bad rank in type token '" + token + "'", i);
    rank = rank * 10 + (token[i] - '0');
    if (rank > 1000) throw parse_error("rank too large", i);
  }
  return {t, static_cast<int>(rank)};
}

// -- roots and the longest element ---------------------------------------------

/// All roots in simple-root coordinates (integer vectors), by reflection
/// closure of the simple roots.
inline std::vector<std::vector<long long>> all_roots_in_root_coords(const RootSystem& rs) {
  const int n = rs.rank;
  auto reflect_rc = [&](std::vector<long long> v, int j) {
    long long s = 0;
    for (int i = 0; i < n; ++i)
      s += v[static_cast<std::size_t>(i)] * rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    v[static_cast<std::size_t>(j)] -= s;
    return v;
  };
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    seen.insert(v);
    frontier.push_back(std::move(v));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& v : frontier)
      for (int j = 0; j < n; ++j) {
        auto w = reflect_rc(v, j);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<std::vector<long long>> positive_roots_in_root_coords(const RootSystem& rs) {
  std::vector<std::vector<long long>> pos;
  for (auto& v : all_roots_in_root_coords(rs)) {
    bool nonneg = true;
    for (long long c : v) nonneg = nonneg && c >= 0;
    if (nonneg) pos.push_back(v);
  }
  return pos;
}

inline std::vector<Rat> root_coords_to_ambient(const RootSystem& rs,
                                               const std::vector<long long>& v) {
  std::vector<Rat> out(static_cast<std::size_t>(rs.ambient), Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    for (int k = 0; k < rs.ambient; ++k)
      out[static_cast<std::size_t>(k)] +=
          Rat(v[static_cast<std::size_t>(i)]) *
          rs.simple_roots[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  return out;
}

/// Ambient matrix of the reflection in a root: v -> v - 2(v,a)/(a,a) a.
inline Matrix<Rat> reflection_matrix(const RootSystem& rs, const std::vector<Rat>& a) {
  const Rat norm = detail::dot(a, a);
  std::vector<Rat> entries;
  entries.reserve(static_cast<std::size_t>(rs.ambient) * rs.ambient);
  for (int r = 0; r < rs.ambient; ++r)
    for (int c = 0; c < rs.ambient; ++c) {
      Rat x = 2 * a[static_cast<std::size_t>(r)] * a[static_cast<std::size_t>(c)] / norm;
      entries.push_back((r == c ? Rat(1) : Rat(0)) - x);
    }
  return Matrix<Rat>(rs.ambient, std::move(entries));
}

inline std::vector<Rat> apply_matrix(const Matrix<Rat>& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(static_cast<std::size_t>(m.dim()), Rat(0));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      out[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

/// Weyl group element: ambient orthogonal matrix plus a reduced word in
/// simple reflections (1-based); the matrix equals the product of the
/// listed reflections, left to right.
struct WeylElement {
  Matrix<Rat> matrix;
  std::vector<int> word;
};

/// The longest element w0, computed by descending the regular dominant
/// vector 2*rho to the antidominant chamber, one wall per step. The word
/// comes out with length = number of positive roots, hence reduced.
inline WeylElement longest_element(const RootSystem& rs) {
  const auto positive = positive_roots_in_root_coords(rs);
  const std::size_t n_pos = positive.size();
  std::vector<Rat> u(static_cast<std::size_t>(rs.ambient), Rat(0));
  for (const auto& v : positive) {
    const auto amb = root_coords_to_ambient(rs, v);
    for (int k = 0; k < rs.ambient; ++k) u[static_cast<std::size_t>(k)] += amb[static_cast<std::size_t>(k)];
  }
  std::vector<int> visited;
  visited.reserve(n_pos);
  bool moved = true;
  while (moved) {
    if (visited.size() > n_pos) throw error("descent exceeded the positive-root count (internal)");
    moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      const auto& a = rs.simple_roots[static_cast<std::size_t>(i)];
      const Rat d = detail::dot(u, a);
      if (d > 0) {
        const Rat factor = 2 * d / detail::dot(a, a);
        for (int k = 0; k < rs.ambient; ++k)
          u[static_cast<std::size_t>(k)] -= factor * a[static_cast<std::size_t>(k)];
        visited.push_back(i + 1);
        moved = true;
        break;
      }
    }
  }
  if (visited.size() != n_pos)
    throw error("descent length disagrees with the positive-root count (internal)");
  Matrix<Rat> m = Matrix<Rat>::identity(rs.ambient, Rat(1));
  std::vector<int> word;
  word.reserve(visited.size());
  for (auto it = visited.rbegin(); it != visited.rend(); ++it) {
    word.push_back(*it);
    m = m * reflection_matrix(rs, rs.simple_roots[static_cast<std::size_t>(*it - 1)]);
  }
  return WeylElement{std::move(m), std::move(word)};
}

/// w0 = -1 on the span of the simple roots?
inline bool minus_one_in_weyl(const RootSystem& rs) {
  const WeylElement w0 = longest_element(rs);
  for (const auto& a : rs.simple_roots) {
    const auto img = apply_matrix(w0.matrix, a);
    for (std::size_t k = 0; k < a.size(); ++k)
      if (img[k] != -a[k]) return false;
  }
  return true;
}

/// Faithfulness classifier for the conjugation quotient at n = 1: the
/// involution g -> g^{-1} descends nontrivially iff some simple factor
/// fails w0 = -1. For n >= 2 this action is never faithful (the inner
/// automorphisms act trivially); callers should branch on n before asking.
inline bool classify_faithful_n1(const std::vector<std::pair<SimpleType, int>>& factors) {
  if (factors.empty()) throw error("factor list must be nonempty");
  for (const auto& [type, rank] : factors)
    if (!minus_one_in_weyl(make_root_system(type, rank))) return true;
  return false;
}

}  // namespace repvar
