#include <doctest.h>

#include "test_support.hpp"
#include "tverberg/geom_core.hpp"

using namespace tverberg;
using tverberg::testing::config;
using tverberg::testing::frac;
using tverberg::testing::vec;

TEST_CASE("side_counts") {
  auto counts = side_counts(config({{1}, {-1}}), HalfSpace{vec({1}), 0});
  CHECK(counts.inside == 1);
  CHECK(counts.boundary == 0);
  CHECK(counts.outside == 1);

  counts = side_counts(config({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}), HalfSpace{vec({1, 0}), 0});
  CHECK(counts.inside == 2);
  CHECK(counts.boundary == 0);
  CHECK(counts.outside == 2);

  counts = side_counts(config({{0}}), HalfSpace{vec({1}), 0});
  CHECK(counts.inside == 0);
  CHECK(counts.boundary == 1);
  CHECK(counts.outside == 0);

  CHECK_THROWS_AS(side_counts(config({{0}}), HalfSpace{vec({1, 0}), 0}), DimensionError);
}

TEST_CASE("side_counts is invariant under positive scaling") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto cfg = tverberg::testing::random_config(rng, 8, 3, 3);
    HalfSpace h{vec({static_cast<long>(rng.below(5)) - 2, 1, static_cast<long>(rng.below(3)) - 1}),
                Scalar(static_cast<long>(rng.below(5)) - 2)};
    const Scalar s = frac(1 + static_cast<long>(rng.below(7)), 1 + static_cast<long>(rng.below(5)));
    auto a = side_counts(cfg, h);
    auto b = side_counts(cfg, HalfSpace{s * h.normal, s * h.offset});
    CHECK(a.inside == b.inside);
    CHECK(a.boundary == b.boundary);
    CHECK(a.outside == b.outside);
    CHECK(a.inside + a.boundary + a.outside == cfg.size());
  }
}

TEST_CASE("affine_rank") {
  CHECK(affine_rank(config({{0, 0}, {1, 1}, {2, 2}})) == 1);
  CHECK(affine_rank(config({{0, 0}, {1, 0}, {0, 1}})) == 2);
  CHECK(affine_rank(config({{3, 4}})) == 0);
  CHECK(affine_rank(config({{1, 1}, {1, 1}})) == 0);
  CHECK_THROWS(affine_rank(PointConfig{2, {}, {}}));

  SplitMix64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(6), d = 1 + rng.below(4);
    auto cfg = tverberg::testing::random_config(rng, n, d, 1);
    CHECK(affine_rank(cfg) <= std::min(d, n - 1));
  }
}

TEST_CASE("general_position_wrt_origin") {
  CHECK(general_position_wrt_origin(config({{1, 0}, {0, 1}, {1, 1}})));
  CHECK_FALSE(general_position_wrt_origin(config({{1, 0}, {-1, 0}, {0, 1}})));
  CHECK(general_position_wrt_origin(config({{3}})));
  CHECK_FALSE(general_position_wrt_origin(config({{0}})));
  CHECK_FALSE(general_position_wrt_origin(config({{1, 2}, {2, 4}})));
}

TEST_CASE("PointConfig validation") {
  PointConfig bad{2, {vec({1, 2}), vec({1})}, {}};
  CHECK_THROWS_AS(bad.validate(), DimensionError);
  PointConfig colors{1, {vec({1}), vec({2})}, std::vector<int>{0}};
  CHECK_THROWS_AS(colors.validate(), DimensionError);
}

TEST_CASE("Partition") {
  Partition p{3, {0, 2, 1, 2}};
  CHECK_NOTHROW(p.validate(4));
  auto parts = p.parts();
  CHECK(parts == std::vector<std::vector<std::size_t>>{{0}, {2}, {1, 3}});
  CHECK_THROWS(Partition({2, {0, 2}}).validate());
  CHECK_THROWS(p.validate(5));
}
