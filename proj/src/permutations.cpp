#include "tverberg/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tverberg {

Integer derangements(std::size_t r) {
  Integer prev2 = 1, prev1 = 0;  // D_0, D_1
  if (r == 0) return prev2;
  for (std::size_t k = 2; k <= r; ++k) {
    Integer next = Integer(static_cast<unsigned long>(k - 1)) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

Integer factorial(std::size_t r) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), r);
  return f;
}

std::uint64_t forbidden_avoidance_count(std::span<const std::size_t> forbidden) {
  const std::size_t r = forbidden.size();
  if (r > kMaxEnumeratedPermutation)
    throw std::invalid_argument("forbidden_avoidance_count enumerates permutations only up to r = 9");
  for (std::size_t v : forbidden)
    if (v >= r) throw std::invalid_argument("forbidden value outside [0, r)");
  std::vector<std::size_t> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t count = 0;
  do {
    bool avoids = true;
    for (std::size_t i = 0; i < r && avoids; ++i) avoids = sigma[i] != forbidden[i];
    if (avoids) ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

}  // namespace tverberg
