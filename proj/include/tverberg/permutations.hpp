#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "tverberg/num_exact.hpp"

namespace tverberg {

/// D_r from D_r = (r-1)(D_{r-1} + D_{r-2}), D_0 = 1, D_1 = 0.
Integer derangements(std::size_t r);

Integer factorial(std::size_t r);

inline constexpr std::size_t kMaxEnumeratedPermutation = 9;

/// Number of permutations sigma of [0, r) with sigma(i) != forbidden[i] for
/// every i, by enumeration. r = forbidden.size() must not exceed 9.
std::uint64_t forbidden_avoidance_count(std::span<const std::size_t> forbidden);

}  // namespace tverberg
