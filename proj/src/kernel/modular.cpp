#include "dhecke/kernel/modular.hpp"

#include <stdexcept>

namespace dhecke {

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 invmod(u64 a, u64 m) {
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("invmod: not invertible");
  return reduce_signed(old_s, m);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factor_trial(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1U);
  return out;
}

u64 next_prime(u64 n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m == 1) return 1;
  if (gcd_u64(a % m, m) != 1) throw std::domain_error("multiplicative_order: not a unit");
  // Order divides phi(m); compute phi then strip prime factors.
  u64 phi = m;
  for (auto [q, e] : factor_trial(m)) phi = phi / q * (q - 1);
  u64 order = phi;
  for (auto [q, e] : factor_trial(phi)) {
    for (unsigned i = 0; i < e && order % q == 0; ++i) {
      if (powmod(a, order / q, m) == 1) {
        order /= q;
      } else {
        break;
      }
    }
  }
  return order;
}

}  // namespace dhecke
