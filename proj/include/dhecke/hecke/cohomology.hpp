#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dhecke/kernel/exterior.hpp"
#include "dhecke/ray_class/ray_class.hpp"

namespace dhecke {

/// Class in H^j(Y(𝔑), F_p) = ⊕_{a ∈ C(𝔑)} Λ^j(F_p^r): one multivector per
/// ray class representative. Coordinates are dual to the E(𝔑) generators.
class CohomologyClass {
 public:
  CohomologyClass(u64 p, unsigned rank, unsigned degree, std::size_t classes);

  /// 1_a: the degree-0 indicator of component a.
  static CohomologyClass indicator(u64 p, unsigned rank, std::size_t classes, std::size_t a);
  /// w placed in component a, zero elsewhere.
  static CohomologyClass concentrated(std::size_t classes, std::size_t a, const MultiVector& w);

  u64 modulus() const { return p_; }
  unsigned rank() const { return rank_; }
  unsigned degree() const { return degree_; }
  std::size_t classes() const { return components_.size(); }

  const MultiVector& component(std::size_t a) const { return components_[a]; }
  void set_component(std::size_t a, MultiVector w);

  bool is_zero() const;
  CohomologyClass& operator+=(const CohomologyClass& other);
  CohomologyClass scaled(std::int64_t c) const;
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.degree_ == b.degree_ && a.components_ == b.components_;
  }

  /// All coordinates, component by component (for rank computations).
  FpVector flatten() const;

 private:
  u64 p_;
  unsigned rank_;
  unsigned degree_;
  std::vector<MultiVector> components_;
};

/// Derived Hecke operator in normal form Σ_g (g, ω_g): shift by a ray class
/// g, then wedge with ω_g. Homogeneous of one degree; zero terms are dropped.
class HeckeElement {
 public:
  HeckeElement(u64 p, unsigned rank, unsigned degree);

  /// (g, 1): pullback along the class g.
  static HeckeElement shift(u64 p, unsigned rank, std::size_t g);
  /// (g, ω).
  static HeckeElement term(std::size_t g, const MultiVector& omega);

  u64 modulus() const { return p_; }
  unsigned rank() const { return rank_; }
  unsigned degree() const { return degree_; }
  const std::map<std::size_t, MultiVector>& terms() const { return terms_; }

  void add_term(std::size_t g, const MultiVector& omega);
  bool is_zero() const { return terms_.empty(); }
  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement scaled(std::int64_t c) const;
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Coordinates indexed by (class, multivector coordinate) for `classes`
  /// classes (for rank computations).
  FpVector flatten(std::size_t classes) const;

 private:
  u64 p_;
  unsigned rank_;
  unsigned degree_;
  std::map<std::size_t, MultiVector> terms_;
};

/// (g, ω)(g', ω') = (g g', ω ∧ ω'), extended bilinearly.
HeckeElement hecke_multiply(const RayClassGroup& G, const HeckeElement& a, const HeckeElement& b);

/// (H·c)|_a = Σ_g ω_g ∧ c|_{g·a}. Degrees add; past r the result is zero.
CohomologyClass hecke_apply(const RayClassGroup& G, const HeckeElement& H, const CohomologyClass& c);

}  // namespace dhecke
