#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tverberg/geom_core.hpp"

namespace tverberg {

/// Convex-combination coefficients alpha_i >= 0, one entry per point of the
/// hull(s) involved, with the coefficient sum of every group (part).
struct ConvexWitness {
  std::vector<std::pair<std::size_t, Scalar>> coefficients;
  std::map<std::size_t, Scalar> group_sums;
};

/// Some x >= 0 with a·x = b, or nullopt when none exists. Phase-I simplex over
/// exact rationals with Bland's rule.
std::optional<Vector> nonnegative_solution(const Matrix& a, const Vector& b);

/// Witness for 0 in conv(cfg[subset]). An empty subset is infeasible.
std::optional<ConvexWitness> origin_in_hull(const PointConfig& cfg, std::span<const std::size_t> subset);

struct HullIntersection {
  Vector common_point;
  ConvexWitness witness;  // group ids are part positions in the `parts` argument
};

/// A common point of conv(cfg[parts[0]]), ..., conv(cfg[parts[k-1]]). Any empty
/// part makes the intersection empty.
std::optional<HullIntersection> hulls_intersect(const PointConfig& cfg,
                                                const std::vector<std::vector<std::size_t>>& parts);

/// Exact re-substitution checks.
bool verify_origin_witness(const PointConfig& cfg, std::span<const std::size_t> subset, const ConvexWitness& w);
bool verify_intersection(const PointConfig& cfg, const std::vector<std::vector<std::size_t>>& parts,
                         const HullIntersection& hit);

}  // namespace tverberg
