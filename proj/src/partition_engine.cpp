#include "tverberg/partition_engine.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "tverberg/bounds.hpp"
#include "tverberg/rng.hpp"
#include "tverberg/tukey.hpp"

namespace tverberg {

namespace {

Partition draw_partition(std::size_t n, std::size_t r, SplitMix64& rng) {
  Partition p;
  p.r = r;
  p.labels.resize(n);
  for (auto& label : p.labels) label = static_cast<std::size_t>(rng.below(r));
  return p;
}

ColorfulBlockChoice draw_permutation(std::size_t r, SplitMix64& rng) {
  ColorfulBlockChoice choice;
  choice.sigma.resize(r);
  std::iota(choice.sigma.begin(), choice.sigma.end(), 0);
  for (std::size_t i = r; i > 1; --i) std::swap(choice.sigma[i - 1], choice.sigma[rng.below(i)]);
  return choice;
}

void require_parts(std::size_t r) {
  if (r < 2) throw std::invalid_argument("need at least two parts");
}

}  // namespace

Partition random_partition(std::size_t n, std::size_t r, std::uint64_t seed) {
  require_parts(r);
  SplitMix64 rng(seed);
  return draw_partition(n, r, rng);
}

ColorfulBlockChoice random_block_choice(std::size_t r, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("block choice needs r >= 1");
  SplitMix64 rng(seed);
  return draw_permutation(r, rng);
}

std::optional<CertifiedPartition> certified_partition(const PointConfig& cfg, std::size_t r, std::int64_t t_target,
                                                      std::uint64_t seed, std::uint64_t max_trials) {
  cfg.validate();
  require_parts(r);
  if (t_target < 0) throw std::invalid_argument("t_target must be non-negative");
  for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
    auto rng = SplitMix64::substream(seed, trial);
    Partition p = draw_partition(cfg.size(), r, rng);
    ToleranceReport report = tolerance_by_lifted_depth(cfg, p);
    if (report.tolerance >= t_target) return CertifiedPartition{std::move(p), std::move(report), trial};
  }
  return std::nullopt;
}

Partition colorful_partition(const PointConfig& cfg, std::size_t r, const std::vector<ColorfulBlockChoice>& choices) {
  const auto classes = color_classes(cfg);
  if (choices.size() != classes.size()) throw std::invalid_argument("one block choice per color class required");
  Partition p;
  p.r = r;
  p.labels.assign(cfg.size(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].size() != r || choices[c].sigma.size() != r)
      throw std::invalid_argument("color class " + std::to_string(c) + " has " + std::to_string(classes[c].size()) +
                                  " points, expected " + std::to_string(r));
    for (std::size_t k = 0; k < r; ++k) p.labels[classes[c][k]] = choices[c].sigma[k];
  }
  return p;
}

std::optional<CertifiedPartition> certified_colored_partition(const PointConfig& cfg, std::size_t r,
                                                              std::int64_t t_target, std::uint64_t seed,
                                                              std::uint64_t max_trials) {
  cfg.validate();
  require_parts(r);
  if (t_target < 0) throw std::invalid_argument("t_target must be non-negative");
  const auto classes = color_classes(cfg);
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].size() != r)
      throw std::invalid_argument("color class " + std::to_string(c) + " has " + std::to_string(classes[c].size()) +
                                  " points, expected " + std::to_string(r));
  for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
    auto rng = SplitMix64::substream(seed, trial);
    std::vector<ColorfulBlockChoice> choices;
    for (std::size_t c = 0; c < classes.size(); ++c) choices.push_back(draw_permutation(r, rng));
    Partition p = colorful_partition(cfg, r, choices);
    ToleranceReport report = colored_tolerance(cfg, p, Method::lifted_depth);
    if (report.tolerance >= t_target) return CertifiedPartition{std::move(p), std::move(report), trial};
  }
  return std::nullopt;
}

std::optional<CertifiedReayPartition> certified_reay_partition(const PointConfig& cfg, std::size_t r, std::size_t k,
                                                               std::int64_t t_target, std::uint64_t seed,
                                                               std::uint64_t max_trials) {
  cfg.validate();
  require_parts(r);
  if (k < 2 || k > r) throw std::invalid_argument("Reay partition needs 2 <= k <= r");
  if (t_target < 0) throw std::invalid_argument("t_target must be non-negative");
  for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
    auto rng = SplitMix64::substream(seed, trial);
    Partition p = draw_partition(cfg.size(), r, rng);
    ReayReport report = reay_tolerance(cfg, p, k, Method::lifted_depth);
    if (report.tolerance >= t_target) return CertifiedReayPartition{std::move(p), std::move(report), trial};
  }
  return std::nullopt;
}

SignResult sign_assignment(const PointConfig& vectors, std::uint64_t seed, std::uint64_t max_trials) {
  vectors.validate();
  if (vectors.empty()) throw std::invalid_argument("sign_assignment needs at least one vector");
  SignResult best;
  best.target = bounds::sign_assignment_target(static_cast<std::int64_t>(vectors.size()),
                                               static_cast<std::int64_t>(vectors.dim));
  const Vector origin(vectors.dim);
  bool have = false;
  for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
    auto rng = SplitMix64::substream(seed, trial);
    SignAssignment a;
    PointConfig signed_set = vectors;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      a.signs.push_back(rng.below(2) == 0 ? 1 : -1);
      if (a.signs.back() < 0) signed_set.points[i] = Scalar(-1) * signed_set.points[i];
    }
    const auto tol = static_cast<std::int64_t>(depth(signed_set, origin).depth) - 1;
    if (!have || tol > best.tolerance) {
      have = true;
      best.assignment = std::move(a);
      best.tolerance = tol;
      best.trial = trial;
    }
  }
  return best;
}

}  // namespace tverberg
