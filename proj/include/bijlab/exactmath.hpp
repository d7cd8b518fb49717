#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "bijlab/errors.hpp"
#include "bijlab/exact_int.hpp"

namespace bijlab {

/// base^exp by repeated squaring. 0^0 is 1.
inline ExactInt power(ExactInt base, std::uint64_t exp) {
  ExactInt result{1};
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

inline ExactInt factorial(std::int64_t n) {
  if (n < 0) throw domain_error("factorial: n must be >= 0, got " + std::to_string(n));
  ExactInt result{1};
  for (std::int64_t i = 2; i <= n; ++i) result *= ExactInt(i);
  return result;
}

/// Number of k-element subsets of an n-element set. Zero when k < 0 or k > n.
///
/// Multiplicative formula; each partial product r * (n-k+i) is divisible by
/// i because it equals i * C(n-k+i, i), so every intermediate division is
/// exact.
inline ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw domain_error("binomial: n must be >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return ExactInt{0};
  k = std::min(k, n - k);
  ExactInt result{1};
  for (std::int64_t i = 1; i <= k; ++i) {
    result = divide_exact(result * ExactInt(n - k + i), ExactInt(i));
  }
  return result;
}

}  // namespace bijlab
