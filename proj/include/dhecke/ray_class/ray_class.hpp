#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dhecke/number_field/principal.hpp"
#include "dhecke/ray_class/congruence.hpp"
#include "dhecke/units/units.hpp"

namespace dhecke {

/// a · N(b_j) b_j^{-1} = (generator) for the class representative b_j.
struct ClassLocation {
  std::size_t index = 0;
  Element generator;
};

/// Wide ideal class group, by representatives b_0 = (1), b_1, ... made of
/// primes with norm coprime to `avoid`.
class IdealClassGroup {
 public:
  /// With a target, primes are swept upward until that many classes appear
  /// (ValidationError past prime_bound). Without one, every prime up to
  /// prime_bound is used and the class count is whatever they generate.
  IdealClassGroup(const NumberField& F, const Integer& avoid, std::optional<std::int64_t> target,
                  u64 prime_bound, PrincipalSearchConfig cfg = {});

  std::size_t size() const { return reps_.size(); }
  const std::vector<IdealHNF>& representatives() const { return reps_; }

  /// Throws Inconclusive when a principal test is undecided and no other
  /// representative matched.
  ClassLocation locate(const IdealHNF& a) const;
  std::optional<ClassLocation> try_locate(const IdealHNF& a) const;

 private:
  void adjoin(const IdealHNF& P);

  const NumberField* F_;
  PrincipalSearchConfig cfg_;
  std::vector<IdealHNF> reps_;
  std::vector<IdealHNF> inverses_;
};

/// h_F of a real quadratic field from the primes below the Minkowski bound
/// √|disc| / 2 (Z[θ] must be maximal).
std::int64_t class_number_real_quadratic(const NumberField& F);

/// Q(√d) with fundamental unit and class number filled in natively.
FieldDescriptor real_quadratic_descriptor(std::int64_t d);

/// Narrow ray class group Cl⁺_F(𝔑). Classes are indexed 0..h⁺-1 with 0 the
/// class of (1); each class is keyed by a wide class index j and a
/// coordinate vector in C(𝔑)/image(O_F^×).
class RayClassGroup {
 public:
  RayClassGroup(const NumberField& F, const CongruenceSignGroup& C, const UnitImage& image,
                PrincipalSearchConfig cfg = {});

  std::size_t order() const { return reps_.size(); }
  std::int64_t class_number() const { return static_cast<std::int64_t>(classes_.size()); }
  const std::vector<IdealHNF>& representatives() const { return reps_; }
  const IdealClassGroup& wide_classes() const { return classes_; }
  const std::vector<std::int64_t>& invariants() const { return structure_.presentation.invariants(); }
  /// Smith coordinates of every class (ids are class indices).
  const EnumeratedGroup& structure() const { return structure_; }

  /// Index of the class of a (coprime to 𝔑).
  std::size_t class_of(const IdealHNF& a) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, std::int64_t k) const;

 private:
  struct Key {
    std::size_t wide = 0;
    std::vector<std::int64_t> q;
    friend bool operator<(const Key& a, const Key& b) {
      return a.wide != b.wide ? a.wide < b.wide : a.q < b.q;
    }
  };
  Key key_of(const IdealHNF& a) const;
  Key combine(const Key& a, const Key& b) const;
  std::vector<std::int64_t> quotient_coords(const Element& gamma, std::size_t wide) const;

  const NumberField* F_;
  const CongruenceSignGroup* C_;
  AbelianPresentation cokernel_;
  IdealClassGroup classes_;
  std::vector<IntVector> norm_images_;
  std::vector<std::vector<Key>> cocycle_;
  std::vector<IdealHNF> reps_;
  std::vector<Key> keys_;
  std::map<Key, std::size_t> index_;
  std::vector<std::size_t> inverse_;
  EnumeratedGroup structure_;
};

}  // namespace dhecke
