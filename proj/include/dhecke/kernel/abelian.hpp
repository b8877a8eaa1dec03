#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dhecke/core/integer.hpp"

namespace dhecke {

/// Finite abelian group Z^k / L, where L is the column span of a full-rank
/// relation matrix, put into Smith coordinates. Elements are reported as
/// vectors in Z/d_1 x ... x Z/d_t with 1 < d_1 | d_2 | ... | d_t.
class AbelianPresentation {
 public:
  AbelianPresentation() = default;
  explicit AbelianPresentation(const IntMatrix& relations);

  /// Nontrivial invariant factors, ascending under divisibility.
  const std::vector<std::int64_t>& invariants() const { return invariants_; }

  /// Group order (product of invariants).
  Integer order() const;

  std::size_t ambient_rank() const { return static_cast<std::size_t>(transform_.cols()); }

  /// Canonical Smith coordinates of the class of x in Z^k.
  std::vector<std::int64_t> reduce(const IntVector& x) const;
  std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& x) const;

  std::vector<std::int64_t> add(const std::vector<std::int64_t>& a,
                                const std::vector<std::int64_t>& b) const;
  std::vector<std::int64_t> negate(const std::vector<std::int64_t>& a) const;
  std::vector<std::int64_t> identity() const {
    return std::vector<std::int64_t>(invariants_.size(), 0);
  }

 private:
  IntMatrix transform_;  // rows of U belonging to nontrivial invariants
  std::vector<std::int64_t> invariants_;
};

/// A finite abelian group presented by enumeration: elements are ids in
/// [0, id_bound) and a multiplication oracle. Generators are discovered in
/// the order of `candidates`; every group element gets Smith coordinates.
struct EnumeratedGroup {
  AbelianPresentation presentation;
  /// Generator ids in discovery order.
  std::vector<std::size_t> generators;
  /// Per-id coordinates (empty vector for ids that are not group elements).
  std::vector<std::vector<std::int64_t>> coordinates;
  /// Per-id exponent vectors in the discovered generators.
  std::vector<std::vector<std::int64_t>> exponents;
  std::vector<char> member;

  bool contains(std::size_t id) const { return id < member.size() && member[id]; }
};

EnumeratedGroup enumerate_abelian_group(
    std::size_t id_bound, std::size_t order, std::size_t identity,
    const std::vector<std::size_t>& candidates,
    const std::function<std::size_t(std::size_t, std::size_t)>& mul);

/// Block-diagonal combination of two relation matrices.
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

}  // namespace dhecke
