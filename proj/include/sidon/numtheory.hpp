#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sidon {

// Largest input accepted by trial-division factorization. Anything bigger is
// rejected outright instead of grinding for hours.
inline constexpr std::int64_t kFactorizeCutoff = 1'000'000'000'000LL;

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Prime factorization with multiplicity, ascending. factorize(1) = {}.
inline std::vector<std::int64_t> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  if (n > kFactorizeCutoff)
    throw std::invalid_argument("factorize: " + std::to_string(n) +
                                " exceeds trial-division cutoff " +
                                std::to_string(kFactorizeCutoff));
  std::vector<std::int64_t> factors;
  for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      factors.push_back(d);
      n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

inline std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps = factorize(n);
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

// p^e with overflow guard; both arguments nonnegative.
inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  if (base < 0 || exp < 0) throw std::invalid_argument("checked_pow: negative argument");
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > (INT64_MAX / base))
      throw std::overflow_error("checked_pow: overflow");
    result *= base;
  }
  return result;
}

}  // namespace sidon
