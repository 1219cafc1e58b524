#include "tverberg/geom_core.hpp"

#include <numeric>
#include <string>

#include "tverberg/partition.hpp"

namespace tverberg {

void PointConfig::validate() const {
  if (dim == 0) throw DimensionError("point configuration must have positive dimension");
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].size() != dim)
      throw DimensionError("point " + std::to_string(i) + " has dimension " + std::to_string(points[i].size()) +
                           ", expected " + std::to_string(dim));
  if (colors && colors->size() != points.size()) throw DimensionError("colors must have one entry per point");
}

PointConfig PointConfig::subset(std::span<const std::size_t> indices) const {
  PointConfig out;
  out.dim = dim;
  out.points.reserve(indices.size());
  if (colors) out.colors.emplace();
  for (std::size_t i : indices) {
    out.points.push_back(points.at(i));
    if (colors) out.colors->push_back(colors->at(i));
  }
  return out;
}

PointConfig PointConfig::translated(const Vector& c) const {
  if (c.size() != dim) throw DimensionError("translation vector has wrong dimension");
  PointConfig out = *this;
  for (auto& p : out.points) p = p - c;
  return out;
}

PointConfig make_config(std::vector<Vector> points) {
  PointConfig cfg;
  cfg.dim = points.empty() ? 0 : points.front().size();
  cfg.points = std::move(points);
  cfg.validate();
  return cfg;
}

SideCounts side_counts(const PointConfig& cfg, const HalfSpace& h) {
  if (h.normal.size() != cfg.dim) throw DimensionError("side_counts: half-space dimension mismatch");
  SideCounts counts;
  for (const auto& p : cfg.points) {
    const int s = sgn(dot(h.normal, p) - h.offset);
    if (s > 0) ++counts.inside;
    else if (s == 0) ++counts.boundary;
    else ++counts.outside;
  }
  return counts;
}

std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors) {
  std::vector<std::size_t> chosen;
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (is_zero(vectors[i])) continue;
    rows.push_back(vectors[i]);
    if (rank(Matrix::from_rows(rows)) == rows.size()) chosen.push_back(i);
    else rows.pop_back();
  }
  return chosen;
}

std::size_t affine_rank(const PointConfig& cfg) {
  if (cfg.empty()) throw std::invalid_argument("affine_rank: empty configuration");
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < cfg.size(); ++i) diffs.push_back(cfg.points[i] - cfg.points[0]);
  if (diffs.empty()) return 0;
  return rank(Matrix::from_rows(diffs));
}

bool general_position_wrt_origin(const PointConfig& cfg) {
  const std::size_t d = cfg.dim;
  const std::size_t n = cfg.size();
  if (n < d || d == 0) return true;
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<Vector> rows;
    for (std::size_t i : idx) rows.push_back(cfg.points[i]);
    // d affinely independent points span a hyperplane; it passes through the
    // origin exactly when the points are linearly dependent.
    if (affine_rank(cfg.subset(idx)) == d - 1 && sgn(det(Matrix::from_rows(rows))) == 0) return false;
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == n - d + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

void Partition::validate() const {
  if (r == 0) throw std::invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] >= r)
      throw std::invalid_argument("label of point " + std::to_string(i) + " is " + std::to_string(labels[i]) +
                                  ", outside [0, " + std::to_string(r) + ")");
}

void Partition::validate(std::size_t n) const {
  validate();
  if (labels.size() != n)
    throw std::invalid_argument("partition has " + std::to_string(labels.size()) + " labels for " +
                                std::to_string(n) + " points");
}

std::vector<std::vector<std::size_t>> Partition::parts() const {
  std::vector<std::vector<std::size_t>> out(r);
  for (std::size_t i = 0; i < labels.size(); ++i) out.at(labels[i]).push_back(i);
  return out;
}

}  // namespace tverberg
