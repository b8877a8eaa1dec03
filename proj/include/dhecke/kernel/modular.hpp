#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dhecke {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 invmod(u64 a, u64 m);

/// Reduce a signed value into [0, m).
inline u64 reduce_signed(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

bool is_prime(u64 n);

/// Prime factorisation by trial division, ascending primes with exponents.
std::vector<std::pair<u64, unsigned>> factor_trial(u64 n);

/// Smallest prime strictly greater than n.
u64 next_prime(u64 n);

/// Multiplicative order of a modulo m (gcd(a, m) = 1, m >= 1).
u64 multiplicative_order(u64 a, u64 m);

u64 gcd_u64(u64 a, u64 b);

}  // namespace dhecke
