#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dhecke/kernel/exterior.hpp"
#include "dhecke/kernel/fp_matrix.hpp"
#include "dhecke/units/units.hpp"

namespace dhecke {

/// Residue fields larger than this are skipped by scans (their discrete
/// logs are not set up).
inline constexpr u64 kScanResidueCap = 1000000000ULL;

/// χ_v restricted to a list of units: χ_v = pth_character(·, p, g) on κ_v.
struct Functional {
  PrimeIdeal v;
  u64 p = 0;
  std::vector<u64> values;
  FqElement generator;

  bool is_zero() const;
  FpVector as_vector() const;
};

/// χ_v(ζ), χ_v(ε_1), ..., χ_v(ε_r) with the generator g of κ_v^× (default:
/// the first generator by ascending encoding from 2).
std::vector<u64> generator_characters(const NumberField& F, const UnitGroup& U, const PrimeIdeal& v, u64 p,
                                      const FqElement& g);

/// i*_{v,𝔑}(α): values on the free generators η_1, ..., η_r of E(𝔑).
/// Computed through the exponent vectors, so large generators never need
/// to be expanded.
Functional unit_functional(const NumberField& F, const UnitGroup& U, const EUnits& E, const PrimeIdeal& v, u64 p,
                           std::optional<FqElement> g = std::nullopt);

/// Values on all of O_F^×: (ζ if p | w, then ε_1, ..., ε_r), length r_p.
Functional full_unit_functional(const NumberField& F, const UnitGroup& U, const PrimeIdeal& v, u64 p,
                                std::optional<FqElement> g = std::nullopt);

/// T₁ primes in ascending (ℓ, factor) order: ℓ ∤ disc, gcd(N(v), p·N(𝔑)) = 1,
/// N(v) ≡ 1 mod p. Stops after `budget` primes.
std::vector<PrimeIdeal> scan_t1(const NumberField& F, const Integer& modulus_norm, u64 p, std::size_t budget);

struct TpResult {
  int t_p = 0;
  /// r_p - δ_p, the value the scan should reach.
  int expected = 0;
  /// Every scanned functional, in scan order.
  std::vector<Functional> scanned;
  /// Indices into `scanned` where the rank went up.
  std::vector<std::size_t> certificate;
  bool shortfall = false;
};

/// Rank of the functionals over the first `budget` T₁ primes (stopping
/// early once the rank reaches r).
TpResult compute_tp(const NumberField& F, const UnitGroup& U, const EUnits& E, const Integer& modulus_norm, u64 p,
                    int expected, std::size_t budget = 50);

struct SpanningSet {
  std::vector<Functional> primes;
  /// |S| x r_p matrix of values.
  FpMatrix matrix{2, 0, 0};
  bool complete = false;
  std::size_t scanned = 0;
};

/// Greedy S ⊂ T₁ (modulus (1)) whose functionals on O_F^× are a basis of
/// Hom(O_F^×, F_p).
SpanningSet spanning_set(const NumberField& F, const UnitGroup& U, u64 p, std::size_t budget = 50);

/// Pullback of the degree-two generator of H^•(κ_v^×, F_p) to H²(E(𝔑), F_p).
/// Always zero: E(𝔑) → κ_v^× → Z/p-cyclic quotient factors through one free
/// coordinate after a basis change and H²(Z, F_p) = 0.
MultiVector degree_two_pullback(const PrimeIdeal& v, const EUnits& E, u64 p);

}  // namespace dhecke
