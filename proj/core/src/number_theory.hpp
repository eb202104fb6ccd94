#pragma once

#include <cstdint>
#include <vector>

namespace conjucyclic::detail {

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Multiplicative order of a modulo n (gcd(a, n) = 1, n >= 1).
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t x = a % n;
  std::uint64_t k = 1;
  while (x != 1) {
    x = (x * (a % n)) % n;  // n < 2^32 in every caller
    ++k;
  }
  return k;
}

/// base^e with overflow detection; returns false on overflow past `limit`.
inline bool checked_pow(std::uint64_t base, std::uint64_t e, std::uint64_t limit,
                        std::uint64_t& out) {
  out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (base != 0 && out > limit / base) return false;
    out *= base;
  }
  return out <= limit;
}

}  // namespace conjucyclic::detail
