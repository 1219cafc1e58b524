#include <doctest.h>

#include "test_support.hpp"
#include "tverberg/num_exact.hpp"

using namespace tverberg;
using tverberg::testing::frac;
using tverberg::testing::vec;

TEST_CASE("det") {
  CHECK(det(Matrix::identity(3)) == 1);
  CHECK(det(Matrix::from_rows({vec({0, 1}), vec({1, 0})})) == -1);
  CHECK(det(Matrix::from_rows({vec({2, 1}), vec({1, 2})})) == 3);
  CHECK(det(Matrix::from_rows({{frac(1, 2), frac(1, 3)}, {frac(1, 4), frac(1, 5)}})) == frac(1, 60));
  CHECK_THROWS_AS(det(Matrix(2, 3)), DimensionError);
}

TEST_CASE("det agrees with cofactor expansion on random integer matrices") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    std::vector<Vector> rows(n, Vector(n));
    for (auto& row : rows)
      for (auto& x : row) x = static_cast<long>(rng.below(7)) - 3;
    // Rank-deficient cases show up on their own at this range; force some more.
    if (n > 1 && trial % 5 == 0) rows[n - 1] = rows[0];
    CHECK(det(Matrix::from_rows(rows)) == tverberg::testing::cofactor_det(rows));
  }
}

TEST_CASE("solve_linear") {
  const Vector b = vec({4, -2, 7});
  CHECK(*solve_linear(Matrix::identity(3), b) == b);
  CHECK_FALSE(solve_linear(Matrix::from_rows({vec({1, 2}), vec({2, 4})}), vec({1, 1})));
  CHECK(*solve_linear(Matrix::from_rows({vec({1, 1}), vec({1, -1})}), vec({2, 0})) == vec({1, 1}));
  CHECK_THROWS_AS(solve_linear(Matrix::identity(2), vec({1, 2, 3})), DimensionError);
  CHECK_THROWS_AS(solve_linear(Matrix(2, 3), vec({1, 2})), DimensionError);
}

TEST_CASE("solve_linear solutions re-substitute exactly") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    Matrix a(n, n);
    Vector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = frac(static_cast<long>(rng.below(9)) - 4, 1 + static_cast<long>(rng.below(3)));
      b[i] = static_cast<long>(rng.below(9)) - 4;
    }
    auto x = solve_linear(a, b);
    CHECK(x.has_value() == (sgn(det(a)) != 0));
    if (x) CHECK(a * *x == b);
  }
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::from_rows({vec({1, 2, 3}), vec({2, 4, 6})})) == 1);
  CHECK(rank(Matrix::from_rows({vec({0, 0, 1}), vec({0, 1, 0}), vec({0, 1, 1})})) == 2);
  CHECK(rank(Matrix::from_rows({vec({0, 0}), vec({0, 0})})) == 0);
  CHECK(rank(Matrix::identity(4)) == 4);
}

TEST_CASE("rational strings") {
  CHECK(to_string(frac(-3, 7)) == "-3/7");
  CHECK(to_string(Scalar(5)) == "5/1");
  CHECK(to_string(frac(6, 4)) == "3/2");
  CHECK(parse_scalar("-6/14") == frac(-3, 7));
  CHECK(parse_scalar("5") == 5);
  CHECK(parse_scalar("-1.25") == frac(-5, 4));
  CHECK(parse_scalar("3e-2") == frac(3, 100));
  CHECK(parse_scalar("0.1") == frac(1, 10));
  CHECK(parse_scalar(" 2.5E1 ") == 25);
  CHECK_THROWS(parse_scalar("abc"));
  CHECK_THROWS(parse_scalar("1/0"));
  CHECK_THROWS(parse_scalar(""));
  CHECK_THROWS(parse_scalar("1.2.3"));
  SplitMix64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Scalar q = frac(static_cast<long>(rng.below(2001)) - 1000, 1 + static_cast<long>(rng.below(999)));
    CHECK(parse_scalar(to_string(q)) == q);
  }
}

TEST_CASE("primitive_integer keeps direction") {
  const Vector v{frac(2, 3), frac(-4, 9), Scalar(0)};
  const IntVector p = primitive_integer(v);
  CHECK(p == IntVector{Integer(3), Integer(-2), Integer(0)});
  CHECK(primitive_integer(Vector(3)) == IntVector(3));
}
