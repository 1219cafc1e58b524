#include "tverberg/num_exact.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace tverberg {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("from_rows: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector product: dimension mismatch");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (other.rows_ != cols_) throw DimensionError("matrix product: dimension mismatch");
  Matrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += (*this)(i, k) * other(k, j);
    }
  return p;
}

namespace {

// Scales every row of m to integers; returns the product of the row scales.
Integer integer_rows(const Matrix& m, std::vector<IntVector>& out) {
  out.assign(m.rows(), IntVector(m.cols()));
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return scale;
}

// Fraction-free forward elimination over the first `cols` columns. Returns the
// rank; pivot_cols receives the pivot column of each eliminated row, and
// `sign` tracks row swaps.
std::size_t bareiss(std::vector<IntVector>& a, std::size_t cols, std::vector<std::size_t>& pivot_cols, int& sign) {
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  sign = 1;
  pivot_cols.clear();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    const std::size_t width = a[r].size();
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_cols.push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

Integer integer_det(std::vector<IntVector> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("det: matrix is not square");
  std::vector<std::size_t> pivots;
  int sign = 1;
  // With no column skipping (rank n), the last pivot is the determinant.
  if (bareiss(m, n, pivots, sign) < n) return 0;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != i) return 0;
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

Scalar det(const Matrix& m) {
  if (!m.square()) throw DimensionError("det: matrix is not square");
  if (m.rows() == 0) return 1;
  std::vector<IntVector> a;
  const Integer scale = integer_rows(m, a);
  Scalar d(integer_det(std::move(a)), scale);
  d.canonicalize();
  return d;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (!a.square()) throw DimensionError("solve_linear: matrix is not square");
  if (b.size() != a.rows()) throw DimensionError("solve_linear: right-hand side dimension mismatch");
  const std::size_t n = a.rows();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::vector<IntVector> m;
  integer_rows(aug, m);
  std::vector<std::size_t> pivots;
  int sign = 1;
  if (bareiss(m, n, pivots, sign) < n) return std::nullopt;
  Vector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Scalar acc = Scalar(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Scalar(m[ii][j]) * x[j];
    x[ii] = acc / Scalar(m[ii][ii]);
  }
  return x;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<IntVector> a;
  integer_rows(m, a);
  std::vector<std::size_t> pivots;
  int sign = 1;
  return bareiss(a, m.cols(), pivots, sign);
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: dimension mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: dimension mismatch");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: dimension mismatch");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
  return c;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

IntVector primitive_integer(const Vector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (sgn(g) != 0 && g != 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

Vector to_rational(const IntVector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(v[i]);
  return out;
}

std::string to_string(const Scalar& s) { return s.get_num().get_str() + "/" + s.get_den().get_str(); }

Scalar parse_scalar(std::string_view text) {
  auto fail = [&]() -> Scalar { throw std::invalid_argument("not an exact number: '" + std::string(text) + "'"); };
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) return fail();

  if (auto slash = t.find('/'); slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(t.substr(0, slash), 10) != 0 || den.set_str(t.substr(slash + 1), 10) != 0) return fail();
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (t[pos] == '+' || t[pos] == '-') negative = t[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  for (; pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])); ++pos) {
    digits.push_back(t[pos]);
    seen_digit = true;
  }
  if (pos < t.size() && t[pos] == '.') {
    for (++pos; pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])); ++pos) {
      digits.push_back(t[pos]);
      --exponent;
      seen_digit = true;
    }
  }
  if (!seen_digit) return fail();
  if (pos < t.size() && (t[pos] == 'e' || t[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(t.substr(pos), &used);
    } catch (const std::exception&) {
      return fail();
    }
    pos += used;
    exponent += e;
  }
  if (pos != t.size()) return fail();

  Integer mantissa(digits, 10);
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Scalar q = exponent >= 0 ? Scalar(mantissa * ten_pow) : Scalar(mantissa, ten_pow);
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

}  // namespace tverberg
