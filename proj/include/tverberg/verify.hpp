#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "tverberg/geom_core.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/tukey.hpp"

namespace tverberg {

enum class Method { lifted_depth, exhaustive_oracle };
enum class RemovalUnit { points, classes };

/// Tolerance of a partition. -1 means the hulls do not even intersect.
/// witness_removal, when present, has tolerance + 1 elements (point indices, or
/// class ids for colored reports) and its removal separates the parts.
struct ToleranceReport {
  std::int64_t tolerance = -1;
  Method method = Method::lifted_depth;
  RemovalUnit unit = RemovalUnit::points;
  std::optional<std::vector<std::size_t>> witness_removal;
  std::optional<DepthCertificate> depth_certificate;
  std::optional<Vector> common_point_sample;
  bool capped = false;  // exhaustive search stopped at t_cap without a breaking set
};

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// True iff removing `removal` from the parts leaves hulls with empty intersection.
bool removal_breaks(const PointConfig& cfg, const std::vector<std::vector<std::size_t>>& parts,
                    const std::vector<std::size_t>& removal);

/// depth(lift_partition(cfg, p), 0) - 1.
ToleranceReport tolerance_by_lifted_depth(const PointConfig& cfg, const Partition& p);

/// Largest t <= t_cap such that every removal of at most t points keeps the
/// hulls intersecting. Throws BudgetExceeded past `budget` LP calls.
ToleranceReport tolerance_exhaustive(const PointConfig& cfg, const Partition& p, std::size_t t_cap = kNoCap,
                                     std::uint64_t budget = kDefaultBudget);

/// Class ids from cfg.colors grouped into index lists (class id order).
std::vector<std::vector<std::size_t>> color_classes(const PointConfig& cfg);

/// Throws unless every color class has exactly one point in each part.
void require_colorful(const PointConfig& cfg, const Partition& p);

/// Tolerance counted in removed color classes.
ToleranceReport colored_tolerance(const PointConfig& cfg, const Partition& p, Method method,
                                  std::uint64_t budget = kDefaultBudget);

struct ReayReport {
  std::int64_t tolerance = -1;                   // minimum over tuples
  std::vector<std::vector<std::size_t>> tuples;  // k-subsets of parts, lexicographic
  std::vector<ToleranceReport> reports;
};

ReayReport reay_tolerance(const PointConfig& cfg, const Partition& p, std::size_t k, Method method,
                          std::uint64_t budget = kDefaultBudget);

/// All k-subsets of [0, r) in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t r, std::size_t k);

}  // namespace tverberg
