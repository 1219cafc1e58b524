#pragma once

#include <cstddef>
#include <vector>

namespace tverberg {

/// Assignment of point indices to r parts. labels[i] is the part of point i,
/// 0-based.
struct Partition {
  std::size_t r = 0;
  std::vector<std::size_t> labels;

  std::size_t size() const { return labels.size(); }

  /// Throws std::invalid_argument when r < 1 or a label is out of range.
  void validate() const;
  void validate(std::size_t n) const;

  /// The index sets I_0, ..., I_{r-1}, each ascending.
  std::vector<std::vector<std::size_t>> parts() const;
};

}  // namespace tverberg
