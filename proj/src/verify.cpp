#include "tverberg/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "tverberg/lp_feas.hpp"
#include "tverberg/sarkaria.hpp"

namespace tverberg {

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

std::vector<std::vector<std::size_t>> without(const std::vector<std::vector<std::size_t>>& parts,
                                              const std::set<std::size_t>& gone) {
  std::vector<std::vector<std::size_t>> out(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (std::size_t i : parts[j])
      if (!gone.count(i)) out[j].push_back(i);
  return out;
}

// Removal units (single points or whole color classes) are removed in
// ascending count, lexicographic order; the first breaking set is minimal.
ToleranceReport exhaustive_by_units(const PointConfig& cfg, const std::vector<std::vector<std::size_t>>& parts,
                                    const std::vector<std::vector<std::size_t>>& units, std::size_t t_cap,
                                    std::uint64_t budget, RemovalUnit unit_kind,
                                    const std::vector<std::size_t>& unit_ids) {
  ToleranceReport report;
  report.method = Method::exhaustive_oracle;
  report.unit = unit_kind;
  const std::size_t n = units.size();
  const std::size_t last = t_cap == kNoCap ? n : std::min(n, t_cap + 1);
  std::uint64_t calls = 0;
  std::uint64_t required = 0;
  std::uint64_t layer = 1;
  for (std::size_t s = 0; s <= last; ++s) {
    required += layer;
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    do {
      std::set<std::size_t> gone;
      for (std::size_t u : pick) gone.insert(units[u].begin(), units[u].end());
      auto rest = without(parts, gone);
      bool broken = std::any_of(rest.begin(), rest.end(), [](const auto& part) { return part.empty(); });
      if (!broken) {
        if (calls >= budget)
          throw BudgetExceeded("exhaustive tolerance needs more than " + std::to_string(budget) + " LP calls",
                               required);
        ++calls;
        auto hit = hulls_intersect(cfg, rest);
        broken = !hit;
        if (hit && s == 0) report.common_point_sample = hit->common_point;
      }
      if (broken) {
        report.tolerance = static_cast<std::int64_t>(s) - 1;
        std::vector<std::size_t> witness;
        for (std::size_t u : pick) witness.push_back(unit_ids[u]);
        report.witness_removal = std::move(witness);
        return report;
      }
    } while (s > 0 && next_combination(pick, n));
    layer = layer * (n - s) / (s + 1);
  }
  report.tolerance = static_cast<std::int64_t>(std::min(last, t_cap));
  report.capped = true;
  return report;
}

// Depth of the origin in the lift of the parts `tuple` (all parts when empty).
// With `classes`, blocks are color classes and the tolerance counts classes.
ToleranceReport lifted_report(const PointConfig& cfg, const Partition& p, const std::vector<std::size_t>& tuple,
                              const std::vector<std::vector<std::size_t>>* classes) {
  ToleranceReport report;
  report.method = Method::lifted_depth;
  const LiftedChoice lift = lift_partition(cfg, p, tuple);
  const Vector origin(lift.lifted.dim);
  DepthCertificate cert;
  std::vector<std::size_t> witness;
  if (classes) {
    report.unit = RemovalUnit::classes;
    std::vector<std::size_t> class_of(cfg.size());
    for (std::size_t c = 0; c < classes->size(); ++c)
      for (std::size_t i : (*classes)[c]) class_of[i] = c;
    std::vector<std::vector<std::size_t>> blocks(classes->size());
    for (std::size_t li = 0; li < lift.source.size(); ++li) blocks[class_of[lift.source[li]]].push_back(li);
    cert = block_depth(lift.lifted, blocks, origin);
    std::set<std::size_t> hit;
    for (std::size_t li = 0; li < lift.source.size(); ++li)
      if (cert.witness.contains(lift.lifted.points[li])) hit.insert(class_of[lift.source[li]]);
    witness.assign(hit.begin(), hit.end());
  } else {
    cert = depth(lift.lifted, origin);
    for (std::size_t li = 0; li < lift.source.size(); ++li)
      if (cert.witness.contains(lift.lifted.points[li])) witness.push_back(lift.source[li]);
  }
  report.tolerance = static_cast<std::int64_t>(cert.depth) - 1;
  report.witness_removal = std::move(witness);
  if (report.tolerance >= 0) {
    std::vector<std::size_t> all(lift.lifted.size());
    std::iota(all.begin(), all.end(), 0);
    auto w = origin_in_hull(lift.lifted, all);
    report.common_point_sample = recover_common_point(cfg, lift, {}, *w).point;
  }
  report.depth_certificate = std::move(cert);
  return report;
}

std::vector<std::vector<std::size_t>> singleton_units(const std::vector<std::size_t>& points) {
  std::vector<std::vector<std::size_t>> units;
  for (std::size_t i : points) units.push_back({i});
  return units;
}

// A single part: the hull survives until every unit is gone.
ToleranceReport single_part_report(std::size_t units, Method method, RemovalUnit unit) {
  ToleranceReport report;
  report.method = method;
  report.unit = unit;
  report.tolerance = static_cast<std::int64_t>(units) - 1;
  std::vector<std::size_t> all(units);
  std::iota(all.begin(), all.end(), 0);
  report.witness_removal = std::move(all);
  return report;
}

}  // namespace

std::vector<std::vector<std::size_t>> k_subsets(std::size_t r, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > r) return out;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  do out.push_back(pick);
  while (k > 0 && next_combination(pick, r));
  return out;
}

bool removal_breaks(const PointConfig& cfg, const std::vector<std::vector<std::size_t>>& parts,
                    const std::vector<std::size_t>& removal) {
  auto rest = without(parts, std::set<std::size_t>(removal.begin(), removal.end()));
  return !hulls_intersect(cfg, rest);
}

ToleranceReport tolerance_by_lifted_depth(const PointConfig& cfg, const Partition& p) {
  p.validate(cfg.size());
  if (p.r == 1) return single_part_report(cfg.size(), Method::lifted_depth, RemovalUnit::points);
  return lifted_report(cfg, p, {}, nullptr);
}

ToleranceReport tolerance_exhaustive(const PointConfig& cfg, const Partition& p, std::size_t t_cap,
                                     std::uint64_t budget) {
  cfg.validate();
  p.validate(cfg.size());
  std::vector<std::size_t> all(cfg.size());
  std::iota(all.begin(), all.end(), 0);
  return exhaustive_by_units(cfg, p.parts(), singleton_units(all), t_cap, budget, RemovalUnit::points, all);
}

std::vector<std::vector<std::size_t>> color_classes(const PointConfig& cfg) {
  if (!cfg.colors) throw std::invalid_argument("configuration has no color classes");
  std::map<int, std::vector<std::size_t>> by_color;
  for (std::size_t i = 0; i < cfg.size(); ++i) by_color[(*cfg.colors)[i]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [c, idx] : by_color) out.push_back(std::move(idx));
  return out;
}

void require_colorful(const PointConfig& cfg, const Partition& p) {
  p.validate(cfg.size());
  const auto classes = color_classes(cfg);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].size() != p.r)
      throw std::invalid_argument("color class " + std::to_string(c) + " has " + std::to_string(classes[c].size()) +
                                  " points, expected " + std::to_string(p.r));
    std::set<std::size_t> seen;
    for (std::size_t i : classes[c]) seen.insert(p.labels[i]);
    if (seen.size() != p.r)
      throw std::invalid_argument("partition is not colorful: class " + std::to_string(c) +
                                  " has two points in one part");
  }
}

ToleranceReport colored_tolerance(const PointConfig& cfg, const Partition& p, Method method, std::uint64_t budget) {
  cfg.validate();
  require_colorful(cfg, p);
  const auto classes = color_classes(cfg);
  if (p.r == 1) return single_part_report(classes.size(), method, RemovalUnit::classes);
  if (method == Method::lifted_depth) return lifted_report(cfg, p, {}, &classes);
  std::vector<std::size_t> ids(classes.size());
  std::iota(ids.begin(), ids.end(), 0);
  return exhaustive_by_units(cfg, p.parts(), classes, kNoCap, budget, RemovalUnit::classes, ids);
}

ReayReport reay_tolerance(const PointConfig& cfg, const Partition& p, std::size_t k, Method method,
                          std::uint64_t budget) {
  cfg.validate();
  p.validate(cfg.size());
  if (k < 2 || k > p.r) throw std::invalid_argument("Reay tolerance needs 2 <= k <= r");
  ReayReport out;
  out.tuples = k_subsets(p.r, k);
  const auto parts = p.parts();
  for (const auto& tuple : out.tuples) {
    ToleranceReport rep;
    if (method == Method::lifted_depth) {
      rep = lifted_report(cfg, p, tuple, nullptr);
    } else {
      std::vector<std::vector<std::size_t>> sub;
      std::vector<std::size_t> points;
      for (std::size_t j : tuple) {
        sub.push_back(parts[j]);
        points.insert(points.end(), parts[j].begin(), parts[j].end());
      }
      std::sort(points.begin(), points.end());
      rep = exhaustive_by_units(cfg, sub, singleton_units(points), kNoCap, budget, RemovalUnit::points, points);
    }
    if (out.reports.empty() || rep.tolerance < out.tolerance) out.tolerance = rep.tolerance;
    out.reports.push_back(std::move(rep));
  }
  return out;
}

}  // namespace tverberg
