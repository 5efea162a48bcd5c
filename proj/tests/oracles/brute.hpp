#pragma once

// Test-only oracles, deliberately independent of the library code paths.

#include "rbn/lattice.hpp"

#include <cstdint>
#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace rbn::testing {

/// Rank over Q by fraction-exact Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Affine integer points; the first `collinear` of them on y = 2x + 3.
inline std::vector<std::pair<long, long>> sample_integer_points(int k, int collinear, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-60, 60);
  std::vector<std::pair<long, long>> pts;
  while (static_cast<int>(pts.size()) < k) {
    const int i = static_cast<int>(pts.size());
    const long x = dist(rng);
    const std::pair<long, long> q{x, i < collinear ? 2 * x + 3 : dist(rng)};
    // distinct points, and only the first `collinear` on the line
    bool ok = std::find(pts.begin(), pts.end(), q) == pts.end();
    if (i >= collinear && q.second == 2 * q.first + 3) ok = false;
    if (ok) pts.push_back(q);
  }
  return pts;
}

/// dim of plane curves of degree d with multiplicity m_i at the given affine points,
/// via partial derivatives of the dehomogenized monomials.
inline long fat_point_h0_over_q(int d, const std::vector<int>& mult, const std::vector<std::pair<long, long>>& pts) {
  if (d < 0) return 0;
  std::vector<std::pair<int, int>> mons;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) mons.emplace_back(i, j);
  auto falling = [](int n, int k) {
    mpz_class out = 1;
    for (int t = 0; t < k; ++t) out *= n - t;
    return out;
  };
  auto power = [](long b, int e) {
    mpz_class out = 1;
    for (int t = 0; t < e; ++t) out *= b;
    return out;
  };
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (int a = 0; a < mult[p]; ++a)
      for (int b = 0; a + b < mult[p]; ++b) {
        std::vector<mpq_class> row;
        for (const auto& [i, j] : mons) {
          if (i < a || j < b) {
            row.emplace_back(0);
            continue;
          }
          row.emplace_back(falling(i, a) * falling(j, b) * power(pts[p].first, i - a) * power(pts[p].second, j - b));
        }
        rows.push_back(std::move(row));
      }
  if (rows.empty()) return static_cast<long>(mons.size());
  return static_cast<long>(mons.size() - rational_rank(std::move(rows)));
}

/// Gram matrix of the intersection form in the surface's fixed basis.
inline std::vector<std::vector<long>> gram_matrix(const Surface& s) {
  const std::size_t n = s.picard_rank();
  std::vector<std::vector<long>> g(n, std::vector<long>(n, 0));
  if (s.is_plane_blowup()) {
    g[0][0] = 1;
    for (std::size_t i = 1; i < n; ++i) g[i][i] = -1;
  } else {
    g[0][0] = -s.e();
    g[0][1] = g[1][0] = 1;
    for (std::size_t i = 2; i < n; ++i) g[i][i] = -1;
  }
  return g;
}

inline mpz_class gram_intersect(const Divisor& a, const Divisor& b) {
  const auto g = gram_matrix(a.surface());
  mpz_class out = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out += a[i] * b[j] * g[i][j];
  return out;
}

/// Canonical class from adjunction data: K.C = -2 - C^2 on the basis curves.
inline Divisor adjunction_canonical(const Surface& s) {
  std::vector<mpz_class> c(s.picard_rank());
  if (s.is_plane_blowup()) {
    c[0] = -3;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = 1;
  } else {
    c[0] = -2;
    c[1] = -(s.e() + 2);
    for (std::size_t i = 2; i < c.size(); ++i) c[i] = 1;
  }
  return Divisor(s, std::move(c));
}

inline Divisor random_divisor(const Surface& s, std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<mpz_class> c(s.picard_rank());
  for (auto& x : c) x = dist(rng);
  return Divisor(s, std::move(c));
}

}  // namespace rbn::testing
