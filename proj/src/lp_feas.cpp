#include "tverberg/lp_feas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tverberg {

std::optional<Vector> nonnegative_solution(const Matrix& a, const Vector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw DimensionError("nonnegative_solution: right-hand side dimension mismatch");
  if (m == 0) return Vector(n);

  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<Vector> t(m, Vector(width));
  std::vector<std::size_t> basis(m);
  Vector cost(width);  // reduced costs of the phase-I objective sum(artificials)
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Scalar(-a(i, j)) : a(i, j);
    t[i][n + i] = 1;
    t[i][n + m] = flip ? Scalar(-b[i]) : b[i];
    basis[i] = n + i;
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
    cost[n + m] -= t[i][n + m];
  }

  while (true) {
    // Bland: lowest-index improving column. Artificial columns never re-enter.
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == n) break;

    std::size_t leave = m;
    Scalar best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Scalar ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    // Phase-I objective is bounded below by zero, so some row always qualifies.
    if (leave == m) throw std::logic_error("phase-I simplex: unbounded direction");

    const Scalar pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Scalar f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      const Scalar f = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t[leave][j]) != 0) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (sgn(cost[n + m]) != 0) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][n + m];
  return x;
}

namespace {

void check_indices(const PointConfig& cfg, std::span<const std::size_t> idx) {
  for (std::size_t i : idx)
    if (i >= cfg.size()) throw std::out_of_range("point index " + std::to_string(i) + " out of range");
}

}  // namespace

std::optional<ConvexWitness> origin_in_hull(const PointConfig& cfg, std::span<const std::size_t> subset) {
  check_indices(cfg, subset);
  if (subset.empty()) return std::nullopt;
  const std::size_t d = cfg.dim;
  Matrix a(d + 1, subset.size());
  Vector b(d + 1);
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const auto& p = cfg.points[subset[k]];
    for (std::size_t i = 0; i < d; ++i) a(i, k) = p[i];
    a(d, k) = 1;
  }
  b[d] = 1;
  auto x = nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  ConvexWitness w;
  for (std::size_t k = 0; k < subset.size(); ++k) w.coefficients.emplace_back(subset[k], (*x)[k]);
  w.group_sums[0] = 1;
  return w;
}

std::optional<HullIntersection> hulls_intersect(const PointConfig& cfg,
                                                const std::vector<std::vector<std::size_t>>& parts) {
  if (parts.empty()) throw std::invalid_argument("hulls_intersect: no parts given");
  std::set<std::size_t> seen;
  for (const auto& part : parts) {
    check_indices(cfg, part);
    for (std::size_t i : part)
      if (!seen.insert(i).second) throw std::invalid_argument("hulls_intersect: parts are not disjoint");
  }
  if (std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); })) return std::nullopt;

  const std::size_t d = cfg.dim;
  const std::size_t k = parts.size();
  std::vector<std::size_t> column_point, column_part;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i : parts[j]) {
      column_point.push_back(i);
      column_part.push_back(j);
    }
  const std::size_t n = column_point.size();

  // Rows 0..k-1: per-part sums equal 1. Then for every part j >= 1, d rows of
  // sum_{part 0} alpha a - sum_{part j} alpha a = 0.
  Matrix a(k + (k - 1) * d, n);
  Vector b(a.rows());
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t j = column_part[c];
    const auto& p = cfg.points[column_point[c]];
    a(j, c) = 1;
    for (std::size_t jj = 1; jj < k; ++jj) {
      if (j != 0 && j != jj) continue;
      for (std::size_t i = 0; i < d; ++i) a(k + (jj - 1) * d + i, c) = j == 0 ? p[i] : Scalar(-p[i]);
    }
  }
  for (std::size_t j = 0; j < k; ++j) b[j] = 1;

  auto x = nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  HullIntersection hit;
  hit.common_point.assign(d, Scalar(0));
  for (std::size_t c = 0; c < n; ++c) {
    hit.witness.coefficients.emplace_back(column_point[c], (*x)[c]);
    hit.witness.group_sums[column_part[c]] += (*x)[c];
    if (column_part[c] == 0)
      for (std::size_t i = 0; i < d; ++i) hit.common_point[i] += (*x)[c] * cfg.points[column_point[c]][i];
  }
  return hit;
}

bool verify_origin_witness(const PointConfig& cfg, std::span<const std::size_t> subset, const ConvexWitness& w) {
  std::set<std::size_t> allowed(subset.begin(), subset.end());
  Vector sum(cfg.dim);
  Scalar total = 0;
  for (const auto& [i, alpha] : w.coefficients) {
    if (!allowed.count(i) || sgn(alpha) < 0) return false;
    sum = sum + alpha * cfg.points.at(i);
    total += alpha;
  }
  return total == 1 && is_zero(sum);
}

bool verify_intersection(const PointConfig& cfg, const std::vector<std::vector<std::size_t>>& parts,
                         const HullIntersection& hit) {
  std::map<std::size_t, std::size_t> part_of;
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (std::size_t i : parts[j]) part_of[i] = j;
  std::vector<Vector> combos(parts.size(), Vector(cfg.dim));
  std::vector<Scalar> sums(parts.size());
  for (const auto& [i, alpha] : hit.witness.coefficients) {
    auto it = part_of.find(i);
    if (it == part_of.end() || sgn(alpha) < 0) return false;
    combos[it->second] = combos[it->second] + alpha * cfg.points.at(i);
    sums[it->second] += alpha;
  }
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (sums[j] != 1 || combos[j] != hit.common_point) return false;
  return true;
}

}  // namespace tverberg
