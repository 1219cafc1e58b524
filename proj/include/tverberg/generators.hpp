#pragma once

#include <cstddef>
#include <cstdint>

#include "tverberg/geom_core.hpp"

namespace tverberg::gen {

/// n points uniform on the lattice (1/scale)Z^d inside the closed unit ball.
PointConfig uniform_ball(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t scale = 1000);

/// All points of {0, ..., side-1}^d in lexicographic order.
PointConfig grid(std::size_t side, std::size_t d);

/// The points 1, ..., n on the real line.
PointConfig line(std::size_t n);

/// Ball points grouped in `classes` color classes of r points each;
/// point i has color i / r.
PointConfig colored_classes(std::size_t classes, std::size_t r, std::size_t d, std::uint64_t seed,
                            std::int64_t scale = 1000);

}  // namespace tverberg::gen
