#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dhecke/core/integer.hpp"
#include "dhecke/number_field/real_roots.hpp"

namespace dhecke {

/// Element of Z[θ]: integer coordinates in the power basis 1, θ, ..., θ^{n-1}.
using Element = IntVector;

enum class Provenance { native, ingested };

/// Everything needed to set up a field: minimal polynomial plus trusted unit
/// and class-group data.
struct FieldDescriptor {
  std::string label;
  /// Monic, little-endian: c_0, ..., c_{n-1}, 1.
  std::vector<Integer> min_poly;
  int r1 = 0;
  int r2 = 0;
  std::int64_t torsion_order = 2;
  std::vector<Integer> torsion_generator;
  std::vector<std::vector<Integer>> fundamental_units;
  std::int64_t class_number = 1;
  Provenance provenance = Provenance::ingested;

  int degree() const { return static_cast<int>(min_poly.size()) - 1; }
  int unit_rank() const { return r1 + r2 - 1; }
};

/// Discriminant of a monic integer polynomial (via the resultant with its
/// derivative).
Integer poly_discriminant(const std::vector<Integer>& poly);

/// Arithmetic in Z[θ] = Z[x]/(f) for the descriptor's minimal polynomial.
class NumberField {
 public:
  /// Checks the descriptor's shape (monic, signature matches the real roots,
  /// not Q or imaginary quadratic). Unit data is not checked here.
  explicit NumberField(FieldDescriptor descriptor);

  const FieldDescriptor& descriptor() const { return d_; }
  const std::string& label() const { return d_.label; }
  int degree() const { return n_; }
  int r1() const { return d_.r1; }
  int r2() const { return d_.r2; }
  int unit_rank() const { return d_.unit_rank(); }
  const std::vector<Integer>& min_poly() const { return d_.min_poly; }
  const Integer& discriminant() const { return disc_; }
  /// True when Z[θ] is known to be the maximal order (native quadratic
  /// fields), so primes dividing the discriminant may appear in moduli.
  bool order_is_maximal() const { return d_.provenance == Provenance::native && n_ == 2; }

  Element zero() const { return Element::Zero(n_); }
  Element one() const { return from_int(1); }
  Element theta() const;
  Element from_int(const Integer& a) const;
  Element from_coeffs(const std::vector<Integer>& coeffs) const;
  /// g(θ) reduced to the power basis, for a polynomial of any degree.
  Element evaluate_at_theta(const std::vector<Integer>& g) const;

  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t e) const;
  /// Multiplication-by-a matrix: column j holds a·θ^j.
  IntMatrix mul_matrix(const Element& a) const;
  Integer norm(const Element& a) const;
  Integer trace(const Element& a) const;
  /// a / b when the quotient lies in Z[θ].
  std::optional<Element> divide(const Element& a, const Element& b) const;
  /// Inverse of a unit (norm ±1); throws if a is not a unit.
  Element unit_inverse(const Element& a) const;
  /// a^e for a unit a and any integer e.
  Element unit_power(const Element& a, std::int64_t e) const;

  /// Signs (+1/-1) of a at the real embeddings, ordered by descending root
  /// of the minimal polynomial. Exact (Sturm isolation plus interval
  /// refinement).
  std::vector<int> real_signs(const Element& a) const;
  const std::vector<RootInterval>& real_root_intervals() const { return roots_; }

 private:
  FieldDescriptor d_;
  int n_;
  Integer disc_;
  /// Power basis coordinates of θ^k for k < 2n - 1.
  std::vector<Element> powers_;
  std::vector<RootInterval> roots_;
};

std::string element_to_string(const Element& a);

}  // namespace dhecke
