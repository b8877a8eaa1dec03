#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dhecke/kernel/abelian.hpp"
#include "dhecke/number_field/field.hpp"
#include "dhecke/ray_class/congruence.hpp"

namespace dhecke {

/// O_F^× = <ζ> × <ε_1, ..., ε_r> as recorded in the field descriptor.
struct UnitGroup {
  Element zeta;
  std::int64_t w = 2;
  std::vector<Element> fundamental;

  /// ζ followed by the fundamental units; exponent vectors index into this.
  std::vector<Element> generators() const;
};

/// Reads the unit data from F's descriptor and checks norms and the order
/// of ζ (ValidationError on failure).
UnitGroup unit_group(const NumberField& F);

/// Fundamental unit of Q(√d) in the basis 1, θ with θ = √d, or
/// θ = (1 + √d)/2 when d ≡ 1 mod 4. Continued fraction of θ; the result is
/// the smallest unit > 1 under θ ↦ larger root.
Element fundamental_unit_real_quadratic(std::int64_t d);

/// Image of O_F^× in C(𝔑), through the generators ζ, ε_1, ..., ε_r.
struct UnitImage {
  /// raw_rank x (1 + r): column j is the raw image of generator j.
  IntMatrix images;
  /// |image| = [O_F^× : E(𝔑)].
  Integer index;
  /// Nontrivial invariant factors of the image (≅ O_F^×/E(𝔑)).
  std::vector<Integer> image_invariants;
  /// C(𝔑) / image.
  AbelianPresentation cokernel;
  /// Exponent vectors mapping to the identity: HNF basis of the kernel lattice.
  IntMatrix kernel;

  /// Number of image invariant factors divisible by p.
  int delta(std::uint64_t p) const;
};

UnitImage unit_image_in_modulus(const NumberField& F, const UnitGroup& U, const CongruenceSignGroup& C);

/// E(𝔑): totally positive units ≡ 1 mod 𝔑.
struct EUnits {
  IdealHNF modulus;
  /// Free generators η_i as exponent vectors over (ζ, ε_1, ..., ε_r).
  std::vector<std::vector<std::int64_t>> exponents;
  /// η_i in the power basis; empty when the exponents are too large to expand.
  std::vector<std::optional<Element>> values;
  /// Order of the roots of unity inside E(𝔑).
  std::int64_t torsion_order = 1;
  Integer index;
  std::vector<Integer> image_invariants;

  std::size_t rank() const { return exponents.size(); }
};

/// Kernel basis of the unit image. Each generator is checked to be totally
/// positive with η - 1 ∈ 𝔑 whenever its value is small enough to expand
/// (otherwise the check is the defining congruence on images). Throws
/// TorsionObstruction when E(𝔑) has p-torsion for the given p.
EUnits e_units(const NumberField& F, const UnitGroup& U, const CongruenceSignGroup& C, const UnitImage& image,
               std::optional<std::uint64_t> p = std::nullopt);

/// η = ζ^{k_0} ε_1^{k_1} ... ε_r^{k_r}.
Element unit_from_exponents(const NumberField& F, const UnitGroup& U, const std::vector<std::int64_t>& k);

/// r_p: unit rank, plus one when p divides w.
int compute_rp(const NumberField& F, std::uint64_t p);

struct InvariantsRecord {
  std::uint64_t p = 0;
  int r = 0;
  int r_p = 0;
  int delta_p = 0;
  Integer index;
  std::optional<int> t_p;
  std::optional<std::uint64_t> h_plus;
};

}  // namespace dhecke
