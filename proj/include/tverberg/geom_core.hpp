#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tverberg/num_exact.hpp"

namespace tverberg {

/// A finite labeled point set in Q^dim with optional per-point color ids.
struct PointConfig {
  std::size_t dim = 0;
  std::vector<Vector> points;
  std::optional<std::vector<int>> colors;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  /// Throws DimensionError when a point has the wrong length or colors mismatch.
  void validate() const;

  PointConfig subset(std::span<const std::size_t> indices) const;
  /// Points translated so that `c` becomes the origin.
  PointConfig translated(const Vector& c) const;
};

PointConfig make_config(std::vector<Vector> points);

/// The closed half-space {x : <normal, x> >= offset}.
struct HalfSpace {
  Vector normal;
  Scalar offset;

  bool contains(const Vector& x) const { return dot(normal, x) >= offset; }
};

struct SideCounts {
  std::size_t inside = 0;    // <n, x> > offset
  std::size_t boundary = 0;  // <n, x> == offset
  std::size_t outside = 0;

  std::size_t closed() const { return inside + boundary; }
};

SideCounts side_counts(const PointConfig& cfg, const HalfSpace& h);

/// Dimension of the affine hull; 0 for a single point.
std::size_t affine_rank(const PointConfig& cfg);

/// True iff no d points of cfg span an affine hyperplane through the origin.
bool general_position_wrt_origin(const PointConfig& cfg);

/// Greedy (index-ordered) maximal linearly independent subset of `vectors`.
std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors);

}  // namespace tverberg
