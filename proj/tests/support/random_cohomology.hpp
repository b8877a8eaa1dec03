#pragma once

#include <random>

#include "dhecke/hecke/cohomology.hpp"

namespace dhecke::testing {

inline MultiVector random_multivector(std::mt19937_64& rng, u64 p, unsigned r, unsigned deg) {
  MultiVector w(p, r, deg);
  for (std::size_t i = 0; i < w.size(); ++i) w.set(i, static_cast<std::int64_t>(rng() % p));
  return w;
}

/// Three random terms, so shifts may repeat and collapse.
inline HeckeElement random_hecke(std::mt19937_64& rng, const RayClassGroup& G, u64 p, unsigned r, unsigned deg) {
  HeckeElement H(p, r, deg);
  for (int t = 0; t < 3; ++t) H.add_term(rng() % G.order(), random_multivector(rng, p, r, deg));
  return H;
}

inline CohomologyClass random_class(std::mt19937_64& rng, std::size_t h, u64 p, unsigned r, unsigned deg) {
  CohomologyClass c(p, r, deg, h);
  for (std::size_t a = 0; a < h; ++a) c.set_component(a, random_multivector(rng, p, r, deg));
  return c;
}

}  // namespace dhecke::testing
