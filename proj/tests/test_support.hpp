#pragma once

// Instance generators and brute-force oracles shared by the test binaries.
// Nothing here calls into the code paths the oracles check.

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "tverberg/geom_core.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/rng.hpp"

namespace tverberg::testing {

/// Canonical a/b; the two-argument mpq_class constructor does not reduce.
inline Scalar frac(long a, long b) {
  Scalar q(a, b);
  q.canonicalize();
  return q;
}

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline PointConfig config(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<Vector> points;
  for (auto p : pts) points.push_back(vec(p));
  return make_config(std::move(points));
}

/// Integer points in [-range, range]^d.
inline PointConfig random_config(SplitMix64& rng, std::size_t n, std::size_t d, long range = 5) {
  PointConfig cfg;
  cfg.dim = d;
  for (std::size_t i = 0; i < n; ++i) {
    Vector p;
    for (std::size_t k = 0; k < d; ++k)
      p.emplace_back(static_cast<long>(rng.below(static_cast<std::uint64_t>(2 * range + 1))) - range);
    cfg.points.push_back(std::move(p));
  }
  return cfg;
}

/// Calls f(partition) for all r^n label vectors.
template <class F>
void for_each_partition(std::size_t n, std::size_t r, F&& f) {
  Partition p;
  p.r = r;
  p.labels.assign(n, 0);
  while (true) {
    f(static_cast<const Partition&>(p));
    std::size_t i = 0;
    while (i < n && ++p.labels[i] == r) p.labels[i++] = 0;
    if (i == n) break;
  }
}

template <class F>
void for_each_subset_of_size(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Determinant by cofactor expansion along the first row.
inline Scalar cofactor_det(const std::vector<Vector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Scalar total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m[0][j]) == 0) continue;
    std::vector<Vector> minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Scalar term = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Scalar(-term);
  }
  return total;
}

/// Cramer's rule on a square system; nullopt-like empty vector when singular.
inline std::vector<Vector> replace_column(const std::vector<Vector>& a, std::size_t col, const Vector& b) {
  std::vector<Vector> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i][col] = b[i];
  return out;
}

/// Feasibility of {x >= 0, A x = b} by enumerating basic solutions: every
/// square nonsingular subsystem on a subset of columns and an equal-size
/// subset of rows, solved by Cramer's rule and re-checked on all rows.
inline bool brute_force_feasible(const std::vector<Vector>& a, const Vector& b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  auto check = [&](const Vector& x) {
    for (std::size_t i = 0; i < m; ++i) {
      Scalar s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
      if (s != b[i]) return false;
    }
    for (const auto& xi : x)
      if (sgn(xi) < 0) return false;
    return true;
  };
  if (check(Vector(n))) return true;
  bool found = false;
  for (std::size_t k = 1; k <= std::min(m, n) && !found; ++k) {
    for_each_subset_of_size(n, k, [&](const std::vector<std::size_t>& cols) {
      if (found) return;
      for_each_subset_of_size(m, k, [&](const std::vector<std::size_t>& rows) {
        if (found) return;
        std::vector<Vector> sq(k, Vector(k));
        Vector rhs(k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sq[i][j] = a[rows[i]][cols[j]];
          rhs[i] = b[rows[i]];
        }
        const Scalar d = cofactor_det(sq);
        if (sgn(d) == 0) return;
        Vector x(n);
        for (std::size_t j = 0; j < k; ++j) x[cols[j]] = cofactor_det(replace_column(sq, j, rhs)) / d;
        if (check(x)) found = true;
      });
    });
  }
  return found;
}

}  // namespace tverberg::testing
