#pragma once

#include <cstdint>

namespace detkern {

// Exact factorial, valid through n = 20 (fits in 64 bits).
std::uint64_t factorial(int n);

// Exact binomial coefficient via the multiplicative formula.
std::uint64_t binomial(int n, int k);

double factorial_d(int n);
double binomial_d(int n, int k);

}  // namespace detkern
