#include "detkern/combinatorics.hpp"

#include <stdexcept>

namespace detkern {

std::uint64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  if (n > 20) throw std::overflow_error("factorial: n > 20 overflows 64 bits");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

double factorial_d(int n) { return static_cast<double>(factorial(n)); }
double binomial_d(int n, int k) { return static_cast<double>(binomial(n, k)); }

}  // namespace detkern
