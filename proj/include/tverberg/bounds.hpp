#pragma once

#include <cstdint>

#include "tverberg/num_exact.hpp"

namespace tverberg::bounds {

// Closed-form guarantees. Transcendentals are evaluated in double precision;
// the geometric certificates, not these formulas, are the source of truth.
// Negative tolerances mean "no guarantee" and are returned unclamped.

/// ceil(N/r - sqrt((d+1)(r-1) N ln(Nr) / 2)) - 1
std::int64_t tolerance_from_n(std::int64_t n, std::int64_t d, std::int64_t r);

/// Smallest N >= r*t with tolerance_from_n(N, d, r) >= t.
std::int64_t n_for_tolerance(std::int64_t t, std::int64_t d, std::int64_t r);

/// Whether t + 1 <= N/r - sqrt(((d+1)(r-1) N ln(Nr) + N ln(1/eps)) / 2).
bool random_partition_guarantee(std::int64_t n, std::int64_t t, std::int64_t d, std::int64_t r, double eps);

/// Smallest N satisfying random_partition_guarantee, scanning up from r(t+1).
std::int64_t n_for_probability(std::int64_t t, std::int64_t d, std::int64_t r, double eps);

/// Probability that a uniform permutation of [r] has a fixed point, 1 - D_r/r!.
Scalar fixed_point_probability(std::int64_t r);

/// Largest t with t <= p(r) N - sqrt((d+1)(r-1) N ln(N r^2) / 2) - 1.
std::int64_t colored_tolerance_from_n(std::int64_t n, std::int64_t d, std::int64_t r);

/// sqrt((M/2) [(d+1)(k-1) ln(Mr) + ln C(r,k)]): the slack that brings the
/// union bound over all k-tuples below 1.
double reay_lambda(std::int64_t m, std::int64_t d, std::int64_t r, std::int64_t k);

/// ceil(M/r - reay_lambda) - 1.
std::int64_t reay_tolerance_from_m(std::int64_t m, std::int64_t d, std::int64_t r, std::int64_t k);

/// N/r - sqrt(d N ln(Nr) / 2), a lower bound on the depth of a random colorful choice.
double carath_depth_bound(std::int64_t n, std::int64_t d, std::int64_t r);

/// ceil(carath_depth_bound) when positive, otherwise 0.
std::int64_t carath_guaranteed_depth(std::int64_t n, std::int64_t d, std::int64_t r);

/// Tolerance target of a random sign assignment of N vectors in R^d:
/// ceil(N/2 - sqrt(d N ln(2N) / 2)) - 1.
std::int64_t sign_assignment_target(std::int64_t n, std::int64_t d);

}  // namespace tverberg::bounds
