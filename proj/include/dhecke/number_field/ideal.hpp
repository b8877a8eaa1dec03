#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhecke/kernel/finite_field.hpp"
#include "dhecke/number_field/field.hpp"

namespace dhecke {

/// Nonzero ideal of Z[θ] as a full-rank lattice in column Hermite normal
/// form: upper triangular, positive diagonal, 0 <= H(i, j) < H(i, i).
/// H(0, 0) generates the ideal's intersection with Z.
struct IdealHNF {
  IntMatrix basis;
  Integer norm;

  const Integer& min_integer() const { return basis(0, 0); }
  bool is_unit_ideal() const { return norm == 1; }

  friend bool operator==(const IdealHNF& a, const IdealHNF& b) { return a.basis == b.basis; }
  friend bool operator!=(const IdealHNF& a, const IdealHNF& b) { return !(a == b); }
};

/// Lexicographic comparison of HNF matrices (row-major), for stable ordering.
bool ideal_less(const IdealHNF& a, const IdealHNF& b);

/// Prime ideal (ℓ, g(θ)) with g an irreducible factor of the minimal
/// polynomial mod ℓ; e is the multiplicity of g in that factorisation.
struct PrimeIdeal {
  u64 ell = 0;
  unsigned f = 0;
  unsigned e = 1;
  PolyFp g_poly;
  /// ℓ^f, or 0 when that exceeds 2^62.
  u64 norm = 0;
  IdealHNF ideal;

  /// κ_v = F_ℓ[t]/(g).
  FiniteField residue_field() const { return FiniteField(ell, g_poly); }
};

IdealHNF unit_ideal(const NumberField& F);
/// The ideal (m) for a positive integer m.
IdealHNF integer_ideal(const NumberField& F, const Integer& m);
/// Ideal generated by the given elements. `multiple` must be a nonzero
/// integer in the ideal if supplied (it speeds up the HNF).
IdealHNF ideal_from_generators(const NumberField& F, const std::vector<Element>& gens,
                               std::optional<Integer> multiple = std::nullopt);
IdealHNF principal_ideal(const NumberField& F, const Element& a);
IdealHNF ideal_product(const NumberField& F, const IdealHNF& a, const IdealHNF& b);
IdealHNF ideal_power(const NumberField& F, const IdealHNF& a, unsigned k);
IdealHNF ideal_sum(const NumberField& F, const IdealHNF& a, const IdealHNF& b);
bool ideals_coprime(const NumberField& F, const IdealHNF& a, const IdealHNF& b);
bool ideal_contains(const IdealHNF& a, const Element& x);
/// a ⊆ b as lattices.
bool ideal_subset(const IdealHNF& a, const IdealHNF& b);
/// N(b) · b^{-1}, computed as {x : x b ⊆ N(b) Z[θ]}. Integral, and
/// b · result = (N(b)) whenever b is invertible.
IdealHNF scaled_inverse(const NumberField& F, const IdealHNF& b);

/// Primes over ℓ for scanning. Throws RamifiedOrIndexPrime if ℓ divides
/// disc(min_poly).
std::vector<PrimeIdeal> factor_prime(const NumberField& F, u64 ell);
/// All primes over ℓ, including ramified ones; allowed only when ℓ does not
/// divide the discriminant or the order is known to be maximal.
std::vector<PrimeIdeal> prime_decomposition(const NumberField& F, u64 ell);

/// Reduction Z[θ] -> κ_v.
FqElement residue_image(const NumberField& F, const Element& x, const PrimeIdeal& v, const FiniteField& kv);
FqElement residue_image(const NumberField& F, const Element& x, const PrimeIdeal& v);

/// Ideal together with its prime factorisation.
struct FactoredIdeal {
  IdealHNF ideal;
  std::vector<std::pair<PrimeIdeal, unsigned>> factors;
};

/// Factor an ideal over the primes dividing its norm (maximal order or
/// norm coprime to the discriminant required).
std::vector<std::pair<PrimeIdeal, unsigned>> factor_ideal(const NumberField& F, const IdealHNF& a);

/// All ideals of norm <= bound, ordered by (norm, HNF). Primes dividing the
/// discriminant are used only when the order is known to be maximal.
std::vector<FactoredIdeal> ideals_up_to_norm(const NumberField& F, u64 bound);

std::string ideal_to_string(const IdealHNF& a);

}  // namespace dhecke
