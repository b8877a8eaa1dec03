#pragma once

#include <cstdint>
#include <vector>

#include "dhecke/kernel/fp_matrix.hpp"

namespace dhecke {

/// Binomial coefficient C(n, k) (0 when k > n).
std::uint64_t binomial(unsigned n, unsigned k);

/// Colexicographic rank of a k-subset of {0, ..., r-1} given as a bitmask.
/// Colex order on fixed-size subsets coincides with numeric order of masks.
std::uint64_t colex_rank(std::uint64_t mask);

/// Inverse of colex_rank for subsets of size k.
std::uint64_t colex_unrank(std::uint64_t rank, unsigned k);

/// Element of Λ^j(F_p^r), coordinates indexed by j-subsets in colex order.
/// Degrees above r are allowed and carry no coordinates.
class MultiVector {
 public:
  MultiVector(u64 p, unsigned rank, unsigned degree);

  /// Basis vector e_{i_1} ∧ ... ∧ e_{i_j} for the subset encoded by `mask`.
  static MultiVector basis(u64 p, unsigned rank, std::uint64_t mask);
  /// Degree-0 element c·1.
  static MultiVector scalar(u64 p, unsigned rank, std::int64_t c);
  /// Degree-1 element with the given coordinates.
  static MultiVector from_linear(u64 p, const FpVector& coords);

  u64 modulus() const { return p_; }
  unsigned rank() const { return rank_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return coords_.size(); }

  std::int64_t coeff(std::size_t index) const { return coords_[index]; }
  std::int64_t coeff_of_mask(std::uint64_t mask) const;
  void set(std::size_t index, std::int64_t value);

  bool is_zero() const;

  MultiVector& operator+=(const MultiVector& other);
  MultiVector& operator-=(const MultiVector& other);
  MultiVector scaled(std::int64_t c) const;

  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.p_ == b.p_ && a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
  }

  const std::vector<std::int64_t>& coordinates() const { return coords_; }

 private:
  void check_compatible(const MultiVector& other) const;

  u64 p_;
  unsigned rank_;
  unsigned degree_;
  std::vector<std::int64_t> coords_;
};

/// Sign of e_S ∧ e_T for disjoint S, T: (-1)^{#{(s, t) : s > t}}.
int shuffle_sign(std::uint64_t s, std::uint64_t t);

/// Exterior product. If deg u + deg w > r the result has no coordinates
/// (Λ^j = 0 for j > r) and is_zero() holds.
MultiVector wedge(const MultiVector& u, const MultiVector& w);

}  // namespace dhecke
