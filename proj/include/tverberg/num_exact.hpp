#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tverberg {

/// Exact rational scalar. gmpxx keeps values canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Scalar>;
using IntVector = std::vector<Integer>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Every row must have the same length.
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Matrix transposed() const;
  Vector operator*(const Vector& x) const;
  Matrix operator*(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Scalar det(const Matrix& m);

/// Exact solution of a·x = b when a is nonsingular, nullopt otherwise.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

std::size_t rank(const Matrix& m);

/// Determinant of an integer matrix by Bareiss elimination.
Integer integer_det(std::vector<IntVector> m);

Scalar dot(const Vector& a, const Vector& b);
Integer dot(const IntVector& a, const IntVector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
bool is_zero(const Vector& v);

/// Positive rescaling of v to coprime integers (zero stays zero).
IntVector primitive_integer(const Vector& v);
Vector to_rational(const IntVector& v);

/// "num/den", integers as "5/1".
std::string to_string(const Scalar& s);

/// Accepts "p/q", integers and exact decimals ("-1.25", "3e-2").
Scalar parse_scalar(std::string_view text);

}  // namespace tverberg
