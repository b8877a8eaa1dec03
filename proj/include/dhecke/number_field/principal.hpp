#pragma once

#include <cstdint>

#include "dhecke/number_field/ideal.hpp"

namespace dhecke {

enum class PrincipalStatus { found, not_found, inconclusive };

struct PrincipalResult {
  PrincipalStatus status = PrincipalStatus::inconclusive;
  /// Set when status == found; (generator) equals the ideal exactly.
  Element generator;
};

struct PrincipalSearchConfig {
  /// Largest coordinate radius tried by the lattice box search (degree > 2).
  std::int64_t box_radius = 40;
};

/// Find some α with (α) = a. Quadratic fields use reduction of the
/// associated binary form and never return inconclusive; other degrees
/// search boxes of growing radius in the ideal's HNF coordinates and return
/// inconclusive once the radius bound is exhausted.
PrincipalResult principal_generator(const NumberField& F, const IdealHNF& a,
                                    const PrincipalSearchConfig& cfg = {});

}  // namespace dhecke
