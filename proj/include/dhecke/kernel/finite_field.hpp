#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dhecke/kernel/poly_fp.hpp"

namespace dhecke {

/// Element of F_q = F_ℓ[t]/(g): coordinates w.r.t. 1, t, ..., t^{f-1}.
struct FqElement {
  u64 ell = 2;
  std::vector<u64> coords;

  unsigned degree() const { return static_cast<unsigned>(coords.size()); }
  bool is_zero() const;

  friend bool operator==(const FqElement& a, const FqElement& b) {
    return a.ell == b.ell && a.coords == b.coords;
  }
};

/// The finite field F_ℓ[t]/(g) for a monic irreducible g.
class FiniteField {
 public:
  /// Throws std::invalid_argument if ℓ is not prime or g is not irreducible.
  FiniteField(u64 ell, const PolyFp& modulus);

  static FiniteField prime_field(u64 ell);
  /// F_{p^k}: Conway polynomial for p in {2, 3, 5, 7} and k <= 4, otherwise the
  /// first monic irreducible of degree k by ascending encoding.
  static FiniteField extension(u64 p, unsigned k);

  u64 characteristic() const { return ell_; }
  unsigned degree() const { return f_; }
  const PolyFp& modulus() const { return g_; }
  /// q = ℓ^f (throws CapExceeded above 2^62).
  u64 order() const { return q_; }

  FqElement zero() const;
  FqElement one() const;
  FqElement from_int(std::int64_t a) const;
  FqElement from_coords(std::vector<u64> coords) const;
  /// Bijection [0, q) -> F_q via Σ c_i ℓ^i.
  FqElement from_encoding(u64 code) const;
  u64 encoding(const FqElement& x) const;

  FqElement add(const FqElement& a, const FqElement& b) const;
  FqElement sub(const FqElement& a, const FqElement& b) const;
  FqElement neg(const FqElement& a) const;
  FqElement mul(const FqElement& a, const FqElement& b) const;
  FqElement pow(const FqElement& a, u64 e) const;
  FqElement inv(const FqElement& a) const;

  /// Prime factorisation of q - 1 (trial division, cached).
  const std::vector<std::pair<u64, unsigned>>& unit_group_factors() const;
  u64 multiplicative_order(const FqElement& a) const;
  bool is_generator(const FqElement& a) const;
  /// First generator of F_q^× in ascending encoding order starting from 2.
  /// Requires q <= 10^9 (CapExceeded otherwise).
  FqElement find_generator() const;
  /// First element of exact multiplicative order m (m | q - 1), found as
  /// x^{(q-1)/m} for ascending encodings x.
  FqElement element_of_order(u64 m) const;

 private:
  FqElement reduce(const PolyFp& p) const;
  PolyFp lift(const FqElement& a) const;

  u64 ell_;
  unsigned f_;
  PolyFp g_;
  u64 q_;
  mutable std::vector<std::pair<u64, unsigned>> factors_;
};

/// x ↦ dlog_ζ(x^{(q-1)/p}) with ζ = g^{(q-1)/p}: a surjection F_q^× -> F_p.
class PthCharacter {
 public:
  /// Throws CharacterUndefined if p does not divide q - 1 and GeneratorError
  /// if g does not generate F_q^×.
  PthCharacter(const FiniteField& field, u64 p, const FqElement& g);

  u64 operator()(const FqElement& x) const;
  u64 prime() const { return p_; }
  const FqElement& root_of_unity() const { return zeta_; }

 private:
  const FiniteField* field_;
  u64 p_;
  u64 exponent_;
  FqElement zeta_;
  std::unordered_map<u64, u64> dlog_;
};

u64 pth_character(const FiniteField& field, const FqElement& x, u64 p, const FqElement& g);

}  // namespace dhecke
