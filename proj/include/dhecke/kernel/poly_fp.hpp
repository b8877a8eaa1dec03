#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dhecke/core/integer.hpp"
#include "dhecke/kernel/modular.hpp"

namespace dhecke {

/// Univariate polynomial over F_ℓ, coefficients little-endian in [0, ℓ).
/// The zero polynomial has an empty coefficient vector.
struct PolyFp {
  u64 ell = 2;
  std::vector<u64> c;

  PolyFp() = default;
  PolyFp(u64 modulus, std::vector<u64> coeffs);

  static PolyFp zero(u64 modulus) { return PolyFp(modulus, {}); }
  static PolyFp one(u64 modulus) { return PolyFp(modulus, {1}); }
  static PolyFp x(u64 modulus) { return PolyFp(modulus, {0, 1}); }
  /// Reduce an integer polynomial (little-endian) mod ℓ.
  static PolyFp from_integers(u64 modulus, const std::vector<Integer>& coeffs);
  static PolyFp from_signed(u64 modulus, const std::vector<std::int64_t>& coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  u64 lead() const { return c.empty() ? 0 : c.back(); }
  u64 coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  void trim();

  u64 evaluate(u64 t) const;

  friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.ell == b.ell && a.c == b.c; }
};

PolyFp operator+(const PolyFp& a, const PolyFp& b);
PolyFp operator-(const PolyFp& a, const PolyFp& b);
PolyFp operator*(const PolyFp& a, const PolyFp& b);
PolyFp scale(const PolyFp& a, u64 s);

/// Quotient and remainder; b must be nonzero.
std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);
PolyFp operator%(const PolyFp& a, const PolyFp& b);
PolyFp operator/(const PolyFp& a, const PolyFp& b);

PolyFp monic(const PolyFp& a);
/// Monic gcd (zero if both inputs are zero).
PolyFp gcd(const PolyFp& a, const PolyFp& b);
PolyFp derivative(const PolyFp& a);

/// base^e mod m.
PolyFp powmod(const PolyFp& base, u64 e, const PolyFp& m);

/// Rabin irreducibility test.
bool is_irreducible(const PolyFp& f);

/// Total order used everywhere factors are listed: by degree, then by the
/// coefficients from the top down, each read as (-c mod ℓ). For linear
/// factors this orders x - a by ascending root a.
bool factor_less(const PolyFp& a, const PolyFp& b);

/// Square-free decomposition of a monic polynomial: pairs (g, m) with g
/// square-free, pairwise coprime, and f = prod g^m.
std::vector<std::pair<PolyFp, unsigned>> squarefree_decomposition(const PolyFp& f);

/// Complete factorisation of a monic polynomial into monic irreducibles with
/// multiplicities, sorted by factor_less. Uses exhaustive root search for
/// linear factors when ℓ < 10^6 and Cantor-Zassenhaus splitting otherwise
/// (fixed-seed randomness, so results are deterministic).
std::vector<std::pair<PolyFp, unsigned>> factor_poly_mod_ell(const PolyFp& f);

/// Convenience overload for an integer polynomial.
std::vector<std::pair<PolyFp, unsigned>> factor_poly_mod_ell(const std::vector<Integer>& f, u64 ell);

}  // namespace dhecke
