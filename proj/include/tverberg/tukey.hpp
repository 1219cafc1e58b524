#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tverberg/geom_core.hpp"

namespace tverberg {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Thrown by the exhaustive oracles when the enumeration would exceed the
/// allowed number of LP calls.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

enum class DepthMode { point, block };

/// depth(X, c) with a closed half-space containing c that attains it.
struct DepthCertificate {
  std::size_t depth = 0;
  HalfSpace witness;
  std::size_t candidate_count = 0;  // hyperplane orientations examined at top level
  DepthMode mode = DepthMode::point;
};

/// Finite family of closed half-spaces containing c such that for every
/// Z subset of y, depth(Z, c) equals the minimum over the family of |H ∩ Z|.
/// Rank-deficient inputs are handled inside the linear span of y - c.
std::vector<HalfSpace> candidate_halfspaces(const PointConfig& y, const Vector& c);

/// Exact Tukey depth of c in x.
DepthCertificate depth(const PointConfig& x, const Vector& c);

/// Minimum over closed half-spaces containing c of the number of distinct
/// blocks with a point in the half-space. `blocks` must partition the indices.
DepthCertificate block_depth(const PointConfig& x, const std::vector<std::vector<std::size_t>>& blocks,
                             const Vector& c);

/// Depth computed without half-spaces: the smallest s such that removing some s
/// points leaves c outside the hull of the rest (one LP per removal).
std::size_t depth_oracle(const PointConfig& x, const Vector& c, std::uint64_t budget = kDefaultBudget);

/// Block id per point; throws unless `blocks` is a partition of [0, n).
std::vector<std::size_t> block_index(const std::vector<std::vector<std::size_t>>& blocks, std::size_t n);

/// Number of distinct blocks with a point in the closed half-space h.
std::size_t blocks_in_halfspace(const PointConfig& x, const std::vector<std::size_t>& block_of, const HalfSpace& h);

/// Re-checks a certificate: the witness contains c and holds exactly `depth`
/// points (or blocks).
bool certificate_valid(const PointConfig& x, const Vector& c, const DepthCertificate& cert,
                       const std::vector<std::vector<std::size_t>>* blocks = nullptr);

}  // namespace tverberg
