#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dhecke/hecke/cohomology.hpp"
#include "dhecke/hecke/functionals.hpp"

namespace dhecke {

/// Everything that depends on (F, 𝔑) but not on p. Holds internal
/// pointers, so it is neither copied nor moved.
class Level {
 public:
  Level(const NumberField& F, const IdealHNF& modulus, std::uint64_t residue_cap = 100000,
        PrincipalSearchConfig cfg = {});
  Level(const Level&) = delete;
  Level& operator=(const Level&) = delete;

  const NumberField& field() const { return *F_; }
  const IdealHNF& modulus() const { return C_.modulus(); }
  const UnitGroup& units() const { return U_; }
  const CongruenceSignGroup& congruence() const { return C_; }
  const UnitImage& unit_image() const { return image_; }
  const RayClassGroup& ray_classes() const { return *G_; }

 private:
  const NumberField* F_;
  UnitGroup U_;
  CongruenceSignGroup C_;
  UnitImage image_;
  std::unique_ptr<RayClassGroup> G_;
};

struct PsiReport {
  bool hypothesis_holds = false;
  std::int64_t dim_h0 = 0;
  std::int64_t dim_h1 = 0;
  std::int64_t dim_domain = 0;
  std::int64_t dim_image = 0;
  bool is_isomorphism = false;
};

/// Dimensions around Ψ: T¹ ⊗ H⁰ → H¹, from explicit ranks. The domain is
/// spanned by the operators (g, φ_v) over the scanned functionals, the image
/// by their values on 1_1 (H⁰ = T⁰ 1_1), and dim H⁰ is the orbit rank of 1_1.
PsiReport psi_report(const Level& L, const EUnits& E, const TpResult& tp, u64 p);

struct CharacterOccurrence {
  /// Exponents a_i: χ(e_i) = ω^{(e'/d'_i) a_i} on the p'-parts of the invariant generators.
  std::vector<std::int64_t> exponents;
  bool in_h0 = false;
  bool in_h1 = false;
  bool eigenvector_checked = false;
  /// A degree-one operator maps the H⁰ eigenvector to a nonzero class.
  bool operator_witness = false;
};

struct EigenReport {
  std::size_t count = 0;
  unsigned extension_degree = 1;
  u64 field_order = 0;
  std::vector<CharacterOccurrence> characters;
  bool matched_both_degrees = true;
};

/// Characters of the p'-quotient of Cl⁺_F(𝔑) with values in F_{p^k}, and
/// where their isotypic projectors are nonzero.
EigenReport eigensystem_report(const Level& L, const EUnits& E, const TpResult& tp, u64 p);

}  // namespace dhecke
