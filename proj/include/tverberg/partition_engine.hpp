#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tverberg/geom_core.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/verify.hpp"

namespace tverberg {

/// Per-class permutation: point k of the class goes to part sigma[k].
struct ColorfulBlockChoice {
  std::vector<std::size_t> sigma;
};

struct SignAssignment {
  std::vector<int> signs;  // +1 or -1 per vector
};

/// Labels i.i.d. uniform on [0, r), a pure function of (n, r, seed).
Partition random_partition(std::size_t n, std::size_t r, std::uint64_t seed);

/// Uniform permutation of [0, r) by Fisher-Yates.
ColorfulBlockChoice random_block_choice(std::size_t r, std::uint64_t seed);

struct CertifiedPartition {
  Partition partition;
  ToleranceReport report;
  std::uint64_t trial = 0;  // index of the first certified trial
};

/// First trial (trial i draws from SplitMix64::substream(seed, i)) whose
/// lifted-depth tolerance reaches t_target; nullopt after max_trials failures.
std::optional<CertifiedPartition> certified_partition(const PointConfig& cfg, std::size_t r, std::int64_t t_target,
                                                      std::uint64_t seed, std::uint64_t max_trials);

/// Same for colorful partitions of the color classes in cfg.colors (each of
/// exactly r points); tolerance counts removed classes.
std::optional<CertifiedPartition> certified_colored_partition(const PointConfig& cfg, std::size_t r,
                                                              std::int64_t t_target, std::uint64_t seed,
                                                              std::uint64_t max_trials);

struct CertifiedReayPartition {
  Partition partition;
  ReayReport report;
  std::uint64_t trial = 0;
};

/// Partition whose every k-tuple of parts has lifted tolerance >= t_target.
std::optional<CertifiedReayPartition> certified_reay_partition(const PointConfig& cfg, std::size_t r, std::size_t k,
                                                               std::int64_t t_target, std::uint64_t seed,
                                                               std::uint64_t max_trials);

struct SignResult {
  SignAssignment assignment;
  std::int64_t tolerance = -1;  // depth({s_i v_i}, 0) - 1 of the best trial
  std::int64_t target = -1;     // ceil(N/2 - sqrt(d N ln(2N)/2)) - 1
  std::uint64_t trial = 0;
};

/// Best of max_trials random sign assignments (lowest trial index on ties).
SignResult sign_assignment(const PointConfig& vectors, std::uint64_t seed, std::uint64_t max_trials);

/// Partition of cfg induced by one block choice per color class.
Partition colorful_partition(const PointConfig& cfg, std::size_t r, const std::vector<ColorfulBlockChoice>& choices);

}  // namespace tverberg
