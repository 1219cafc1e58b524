#include "tverberg/sarkaria.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tverberg {

CompanionBasis companion_basis(std::size_t r) {
  if (r < 2) throw std::invalid_argument("companion basis needs r >= 2");
  CompanionBasis b;
  b.r = r;
  for (std::size_t j = 0; j + 1 < r; ++j) {
    Vector e(r - 1);
    e[j] = 1;
    b.vectors.push_back(std::move(e));
  }
  b.vectors.emplace_back(r - 1, Scalar(-1));
  return b;
}

bool has_equal_coefficient_kernel(const CompanionBasis& basis) {
  const std::size_t r = basis.vectors.size();
  if (r < 2) return false;
  Matrix m(r - 1, r);
  Vector sum(r - 1);
  for (std::size_t j = 0; j < r; ++j) {
    if (basis.vectors[j].size() != r - 1) return false;
    for (std::size_t i = 0; i + 1 < r; ++i) m(i, j) = basis.vectors[j][i];
    sum = sum + basis.vectors[j];
  }
  // Rank r-1 means a one-dimensional kernel; it must contain (1, ..., 1).
  return rank(m) == r - 1 && is_zero(sum);
}

Vector lift_point(const Vector& a, const Vector& u) {
  if (u.empty()) throw DimensionError("lift_point: empty companion vector");
  const std::size_t k = u.size();
  Vector out((a.size() + 1) * k);
  for (std::size_t i = 0; i <= a.size(); ++i) {
    const Scalar& ai = i < a.size() ? a[i] : Scalar(1);
    for (std::size_t j = 0; j < k; ++j) out[i * k + j] = ai * u[j];
  }
  return out;
}

std::vector<std::size_t> LiftedChoice::surviving(const std::vector<std::size_t>& removal) const {
  std::set<std::size_t> gone(removal.begin(), removal.end());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < source.size(); ++i)
    if (!gone.count(source[i])) keep.push_back(i);
  return keep;
}

LiftedChoice lift_partition(const PointConfig& cfg, const Partition& p, const std::vector<std::size_t>& restrict_to) {
  cfg.validate();
  p.validate(cfg.size());
  LiftedChoice lift;
  if (restrict_to.empty()) {
    lift.parts.resize(p.r);
    for (std::size_t j = 0; j < p.r; ++j) lift.parts[j] = j;
  } else {
    lift.parts = restrict_to;
    std::set<std::size_t> unique(restrict_to.begin(), restrict_to.end());
    if (unique.size() != restrict_to.size()) throw std::invalid_argument("lift_partition: repeated part in subset");
    for (std::size_t j : restrict_to)
      if (j >= p.r) throw std::invalid_argument("lift_partition: part id out of range");
  }
  lift.basis = companion_basis(lift.parts.size());
  std::vector<std::optional<std::size_t>> slot_of_part(p.r);
  for (std::size_t s = 0; s < lift.parts.size(); ++s) slot_of_part[lift.parts[s]] = s;

  lift.lifted.dim = (cfg.dim + 1) * (lift.parts.size() - 1);
  lift.slot.resize(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    lift.slot[i] = slot_of_part[p.labels[i]];
    if (!lift.slot[i]) continue;
    lift.lifted.points.push_back(lift_point(cfg.points[i], lift.basis.vectors[*lift.slot[i]]));
    lift.source.push_back(i);
    lift.block.push_back(i);
  }
  return lift;
}

CommonPoint recover_common_point(const PointConfig& cfg, const LiftedChoice& lift,
                                 const std::vector<std::size_t>& removal, const ConvexWitness& lifted_witness) {
  const std::vector<std::size_t> keep = lift.surviving(removal);
  if (!verify_origin_witness(lift.lifted, keep, lifted_witness))
    throw std::invalid_argument("recover_common_point: witness does not re-substitute");

  const std::size_t k = lift.parts.size();
  std::vector<Scalar> mass(k);
  std::vector<Vector> combo(k, Vector(cfg.dim));
  CommonPoint out;
  out.coefficients.resize(k);
  for (const auto& [li, alpha] : lifted_witness.coefficients) {
    const std::size_t src = lift.source.at(li);
    const std::size_t s = *lift.slot[src];
    mass[s] += alpha;
    combo[s] = combo[s] + alpha * cfg.points[src];
    out.coefficients[s].emplace_back(src, alpha);
  }
  // The last lifted row is sum_j (sum_{I_j} alpha) u_j = 0, so all masses agree.
  for (std::size_t s = 0; s < k; ++s)
    if (sgn(mass[s]) <= 0 || mass[s] != mass[0])
      throw std::invalid_argument("recover_common_point: a part carries no weight in the witness");
  for (std::size_t s = 0; s < k; ++s) {
    for (auto& [src, alpha] : out.coefficients[s]) alpha /= mass[s];
    combo[s] = (1 / mass[s]) * combo[s];
    if (combo[s] != combo[0]) throw std::invalid_argument("recover_common_point: parts disagree on the common point");
  }
  out.point = combo[0];
  return out;
}

}  // namespace tverberg
