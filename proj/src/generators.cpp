#include "tverberg/generators.hpp"

#include <stdexcept>

#include "tverberg/rng.hpp"

namespace tverberg::gen {

PointConfig uniform_ball(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t scale) {
  if (d == 0) throw std::invalid_argument("uniform_ball: dimension must be positive");
  if (scale < 1) throw std::invalid_argument("uniform_ball: scale must be positive");
  SplitMix64 rng(seed);
  const auto width = static_cast<std::uint64_t>(2 * scale + 1);
  const Integer limit = Integer(scale) * scale;
  PointConfig cfg;
  cfg.dim = d;
  std::vector<std::int64_t> x(d);
  while (cfg.size() < n) {
    Integer norm = 0;
    for (auto& xi : x) {
      xi = static_cast<std::int64_t>(rng.below(width)) - scale;
      norm += Integer(xi) * xi;
    }
    if (norm > limit) continue;
    Vector p(d);
    for (std::size_t k = 0; k < d; ++k) {
      p[k] = Scalar(Integer(x[k]), Integer(scale));
      p[k].canonicalize();
    }
    cfg.points.push_back(std::move(p));
  }
  return cfg;
}

PointConfig grid(std::size_t side, std::size_t d) {
  if (d == 0 || side == 0) throw std::invalid_argument("grid: side and dimension must be positive");
  PointConfig cfg;
  cfg.dim = d;
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    Vector p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = static_cast<long>(idx[k]);
    cfg.points.push_back(std::move(p));
    std::size_t k = d;
    while (k > 0 && ++idx[k - 1] == side) idx[--k] = 0;
    if (k == 0) break;
  }
  return cfg;
}

PointConfig line(std::size_t n) {
  PointConfig cfg;
  cfg.dim = 1;
  for (std::size_t i = 1; i <= n; ++i) cfg.points.push_back({Scalar(static_cast<long>(i))});
  return cfg;
}

PointConfig colored_classes(std::size_t classes, std::size_t r, std::size_t d, std::uint64_t seed,
                            std::int64_t scale) {
  if (r == 0) throw std::invalid_argument("colored_classes: class size must be positive");
  PointConfig cfg = uniform_ball(classes * r, d, seed, scale);
  std::vector<int> colors(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) colors[i] = static_cast<int>(i / r);
  cfg.colors = std::move(colors);
  return cfg;
}

}  // namespace tverberg::gen
