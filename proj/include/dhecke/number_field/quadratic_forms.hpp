#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dhecke/core/integer.hpp"

namespace dhecke {

/// Indefinite binary quadratic form a x^2 + b x y + c y^2.
struct BinaryForm {
  Integer a, b, c;

  Integer discriminant() const { return b * b - 4 * a * c; }
  Integer eval(const Integer& x, const Integer& y) const { return a * x * x + b * x * y + c * y * y; }

  friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c;
  }
  friend bool operator<(const BinaryForm& f, const BinaryForm& g) {
    if (f.a != g.a) return f.a < g.a;
    if (f.b != g.b) return f.b < g.b;
    return f.c < g.c;
  }
};

using Transform2 = Eigen::Matrix<Integer, 2, 2>;

/// Reduced: |√D - 2|a|| < b < √D, decided exactly with s = isqrt(D).
bool is_reduced(const BinaryForm& f, const Integer& s);

/// One reduction step ρ(a, b, c) = (c, b', (b'^2 - D) / 4c) with the
/// normalisation of b' relative to c. Returns the new form; `step` receives
/// the matrix M with f ∘ M = ρ(f).
BinaryForm rho(const BinaryForm& f, const Integer& D, const Integer& s, Transform2* step = nullptr);

/// The ρ-cycle of reduced forms containing the reduction of f, together with
/// the accumulated transform taking f to each cycle member.
struct FormCycle {
  std::vector<BinaryForm> forms;
  std::vector<Transform2> transforms;
  /// Forms met before the cycle was entered (with their transforms).
  std::vector<BinaryForm> approach;
  std::vector<Transform2> approach_transforms;
};

FormCycle reduction_cycle(const BinaryForm& f);

/// (x, y) with f(x, y) = ±1 if f represents ±1, else nullopt (decided by
/// walking the reduction path and the full cycle).
std::optional<std::pair<Integer, Integer>> represent_unit(const BinaryForm& f);

/// All reduced forms of discriminant D (D > 0 not a square).
std::vector<BinaryForm> reduced_forms(const Integer& D);

/// Number of ρ-cycles of reduced forms of discriminant D; for a fundamental
/// discriminant this is the narrow class number of Q(√D).
std::size_t hplus_form_cycles(const Integer& D);

}  // namespace dhecke
