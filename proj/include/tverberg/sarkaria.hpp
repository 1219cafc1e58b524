#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tverberg/geom_core.hpp"
#include "tverberg/lp_feas.hpp"
#include "tverberg/partition.hpp"

namespace tverberg {

/// r vectors in Q^{r-1} whose only linear dependences have equal coefficients:
/// e_1, ..., e_{r-1}, -(e_1 + ... + e_{r-1}).
struct CompanionBasis {
  std::size_t r = 0;
  std::vector<Vector> vectors;
};

CompanionBasis companion_basis(std::size_t r);

/// True iff the kernel of the (r-1) x r matrix [u_1 ... u_r] is span(1, ..., 1).
bool has_equal_coefficient_kernel(const CompanionBasis& basis);

/// (a, 1) ⊗ u flattened row-major: entry (row i of (a,1), column j of u) sits at
/// index i * dim(u) + j.
Vector lift_point(const Vector& a, const Vector& u);

/// The colorful choice x_i = (a_i, 1) ⊗ u_{j_i} of a partition.
struct LiftedChoice {
  PointConfig lifted;                                // dimension (d+1)(k-1)
  std::vector<std::optional<std::size_t>> slot;      // per source point: position of its part in `parts`
  std::vector<std::size_t> source;                   // per lifted point: source index
  std::vector<std::size_t> block;                    // per lifted point: block id (source index in plain mode)
  std::vector<std::size_t> parts;                    // parts that were lifted, in basis order
  CompanionBasis basis;

  /// Lifted indices of the points whose sources are not in `removal`.
  std::vector<std::size_t> surviving(const std::vector<std::size_t>& removal) const;
};

/// Lifts every point (restrict_to empty) or only the points of the listed parts,
/// using companion_basis(|restrict_to|) in the listed order.
LiftedChoice lift_partition(const PointConfig& cfg, const Partition& p,
                            const std::vector<std::size_t>& restrict_to = {});

struct CommonPoint {
  Vector point;
  /// Per lifted part, (source index, coefficient) with coefficients summing to 1.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> coefficients;
};

/// Converts a witness of 0 ∈ conv(lifted points not removed) into the common
/// point of the parts' hulls. Throws std::invalid_argument if the witness does
/// not re-substitute or a lifted part is emptied.
CommonPoint recover_common_point(const PointConfig& cfg, const LiftedChoice& lift,
                                 const std::vector<std::size_t>& removal, const ConvexWitness& lifted_witness);

}  // namespace tverberg
