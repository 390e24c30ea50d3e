#pragma once

#include <cstdint>
#include <vector>

namespace qlcft {

bool is_prime(std::int64_t n);

// p-adic valuation of a nonzero n. Throws std::invalid_argument for n == 0.
int valuation(std::int64_t n, std::int64_t p);
__extension__ using Int128 = __int128;

int valuation128(Int128 n, std::int64_t p);

// p^k, throwing std::overflow_error if the result does not fit in int64.
std::int64_t ipow(std::int64_t p, int k);

// Largest k with p^k <= bound (0 when p > bound).
int floor_log(std::int64_t p, std::int64_t bound);

std::vector<std::int64_t> divisors(std::int64_t n);

// Distinct prime factors in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);

struct ExtendedGcd {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

// g = x*a + y*b with g >= 0.
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

// Nonnegative remainder.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace qlcft
