#include "tverberg/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "tverberg/permutations.hpp"

namespace tverberg::bounds {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

double ln_binomial(std::int64_t n, std::int64_t k) {
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

}  // namespace

std::int64_t tolerance_from_n(std::int64_t n, std::int64_t d, std::int64_t r) {
  require(n >= 1 && d >= 1 && r >= 2, "tolerance_from_n: need N >= 1, d >= 1, r >= 2");
  const double nn = static_cast<double>(n);
  const double slack = std::sqrt(static_cast<double>((d + 1) * (r - 1)) * nn * std::log(nn * r) / 2);
  return static_cast<std::int64_t>(std::ceil(nn / r - slack)) - 1;
}

std::int64_t n_for_tolerance(std::int64_t t, std::int64_t d, std::int64_t r) {
  require(t >= 0 && d >= 1 && r >= 2, "n_for_tolerance: need t >= 0, d >= 1, r >= 2");
  std::int64_t n = std::max<std::int64_t>(1, r * t);
  while (tolerance_from_n(n, d, r) < t) ++n;
  return n;
}

bool random_partition_guarantee(std::int64_t n, std::int64_t t, std::int64_t d, std::int64_t r, double eps) {
  const double nn = static_cast<double>(n);
  const double inner = static_cast<double>((d + 1) * (r - 1)) * nn * std::log(nn * r) + nn * std::log(1 / eps);
  return static_cast<double>(t + 1) <= nn / r - std::sqrt(inner / 2);
}

std::int64_t n_for_probability(std::int64_t t, std::int64_t d, std::int64_t r, double eps) {
  require(t >= 0 && d >= 1 && r >= 2, "n_for_probability: need t >= 0, d >= 1, r >= 2");
  require(eps > 0 && eps < 1, "n_for_probability: need 0 < eps < 1");
  std::int64_t n = r * (t + 1);
  while (!random_partition_guarantee(n, t, d, r, eps)) ++n;
  return n;
}

Scalar fixed_point_probability(std::int64_t r) {
  require(r >= 1, "fixed_point_probability: need r >= 1");
  const auto ur = static_cast<std::size_t>(r);
  Scalar p = 1 - Scalar(derangements(ur), factorial(ur));
  p.canonicalize();
  return p;
}

std::int64_t colored_tolerance_from_n(std::int64_t n, std::int64_t d, std::int64_t r) {
  require(n >= 1 && d >= 1 && r >= 2, "colored_tolerance_from_n: need N >= 1, d >= 1, r >= 2");
  const double nn = static_cast<double>(n);
  const double p = fixed_point_probability(r).get_d();
  const double slack =
      std::sqrt(static_cast<double>((d + 1) * (r - 1)) * nn * std::log(nn * static_cast<double>(r * r)) / 2);
  return static_cast<std::int64_t>(std::floor(p * nn - slack - 1));
}

double reay_lambda(std::int64_t m, std::int64_t d, std::int64_t r, std::int64_t k) {
  require(m >= 1 && d >= 1 && k >= 2 && k <= r, "reay bound: need M >= 1, d >= 1, 2 <= k <= r");
  const double mm = static_cast<double>(m);
  return std::sqrt(mm / 2 *
                   (static_cast<double>((d + 1) * (k - 1)) * std::log(mm * static_cast<double>(r)) + ln_binomial(r, k)));
}

std::int64_t reay_tolerance_from_m(std::int64_t m, std::int64_t d, std::int64_t r, std::int64_t k) {
  const double lambda = reay_lambda(m, d, r, k);
  return static_cast<std::int64_t>(std::ceil(static_cast<double>(m) / static_cast<double>(r) - lambda)) - 1;
}

double carath_depth_bound(std::int64_t n, std::int64_t d, std::int64_t r) {
  require(n >= 1 && d >= 1 && r >= 1, "carath_depth_bound: need N, d, r >= 1");
  const double nn = static_cast<double>(n);
  return nn / static_cast<double>(r) - std::sqrt(static_cast<double>(d) * nn * std::log(nn * static_cast<double>(r)) / 2);
}

std::int64_t carath_guaranteed_depth(std::int64_t n, std::int64_t d, std::int64_t r) {
  const double b = carath_depth_bound(n, d, r);
  return b > 0 ? static_cast<std::int64_t>(std::ceil(b)) : 0;
}

std::int64_t sign_assignment_target(std::int64_t n, std::int64_t d) {
  require(n >= 1 && d >= 1, "sign_assignment_target: need N, d >= 1");
  const double nn = static_cast<double>(n);
  return static_cast<std::int64_t>(std::ceil(nn / 2 - std::sqrt(static_cast<double>(d) * nn * std::log(2 * nn) / 2))) - 1;
}

}  // namespace tverberg::bounds
