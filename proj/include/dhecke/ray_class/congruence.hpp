#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dhecke/kernel/abelian.hpp"
#include "dhecke/number_field/ideal.hpp"

namespace dhecke {

/// The finite ring Z[θ]/𝔑 with residues identified by integer ids. A residue
/// is kept in the canonical box prod [0, H(i, i)) of the modulus HNF and its
/// id is the mixed-radix index of that box vector.
class ResidueRing {
 public:
  ResidueRing(const NumberField& F, const IdealHNF& modulus);

  std::uint64_t size() const { return size_; }
  int degree() const { return n_; }

  std::uint64_t id_of(const Element& x) const;
  std::uint64_t id_of(std::vector<std::int64_t> v) const;
  std::vector<std::int64_t> residue(std::uint64_t id) const;
  Element element(std::uint64_t id) const;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t one() const { return one_; }

 private:
  std::vector<std::int64_t> canonical(std::vector<std::int64_t> v) const;

  int n_;
  std::int64_t norm_;
  std::uint64_t size_;
  std::uint64_t one_;
  std::vector<std::int64_t> hnf_;  // row-major n x n
  std::vector<std::uint64_t> strides_;
  // Power-basis coordinates of θ^k mod norm for k < 2n - 1.
  std::vector<std::vector<std::int64_t>> powers_;
};

/// C(𝔑) = (Z[θ]/𝔑)^× × {±1}^{r1}, with Smith coordinates for every element.
class CongruenceSignGroup {
 public:
  /// Throws CapExceeded if N(𝔑) > residue_cap.
  CongruenceSignGroup(const NumberField& F, const IdealHNF& modulus, std::uint64_t residue_cap = 100000);

  const IdealHNF& modulus() const { return modulus_; }
  const ResidueRing& ring() const { return ring_; }
  const std::vector<std::pair<PrimeIdeal, unsigned>>& modulus_factors() const { return factors_; }

  /// Order of (Z[θ]/𝔑)^×.
  std::uint64_t residue_order() const { return units_order_; }
  std::uint64_t order() const { return units_order_ << r1_; }
  /// Invariant factors of the residue unit group alone and of the whole group.
  const std::vector<std::int64_t>& residue_invariants() const { return units_.presentation.invariants(); }
  const std::vector<std::int64_t>& invariants() const { return full_.invariants(); }

  /// Generators of Z^k that the raw vectors live in: residue Smith
  /// coordinates followed by one sign bit per real embedding.
  std::size_t raw_rank() const { return moduli_.size(); }
  const std::vector<Integer>& raw_moduli() const { return moduli_; }

  bool is_residue_unit(const Element& x) const;
  /// Raw coordinates of x (coprime to 𝔑); sign bit 1 means negative.
  IntVector raw_image(const Element& x) const;
  /// Canonical coordinates of x in the invariant-factor decomposition.
  std::vector<std::int64_t> image(const Element& x) const { return full_.reduce(raw_image(x)); }
  const AbelianPresentation& presentation() const { return full_; }

  /// Residue ids of the unit group, ascending.
  std::vector<std::uint64_t> unit_ids() const;
  /// Smith coordinates of a residue unit by id.
  const std::vector<std::int64_t>& unit_coordinates(std::uint64_t id) const { return units_.coordinates[id]; }

 private:
  const NumberField* field_;
  IdealHNF modulus_;
  std::vector<std::pair<PrimeIdeal, unsigned>> factors_;
  std::vector<FiniteField> factor_fields_;
  ResidueRing ring_;
  int r1_;
  std::uint64_t units_order_ = 0;
  EnumeratedGroup units_;
  std::vector<Integer> moduli_;
  AbelianPresentation full_;
};

}  // namespace dhecke
