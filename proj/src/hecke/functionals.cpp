#include "dhecke/hecke/functionals.hpp"

#include <stdexcept>

#include "dhecke/core/errors.hpp"
#include "dhecke/kernel/modular.hpp"

namespace dhecke {

bool Functional::is_zero() const {
  for (auto x : values) {
    if (x != 0) return false;
  }
  return true;
}

FpVector Functional::as_vector() const {
  FpVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = static_cast<std::int64_t>(values[i]);
  return v;
}

std::vector<u64> generator_characters(const NumberField& F, const UnitGroup& U, const PrimeIdeal& v, u64 p,
                                      const FqElement& g) {
  const FiniteField kv = v.residue_field();
  const PthCharacter chi(kv, p, g);
  std::vector<u64> out;
  for (const auto& u : U.generators()) out.push_back(chi(residue_image(F, u, v, kv)));
  return out;
}

namespace {

FqElement default_generator(const PrimeIdeal& v) { return v.residue_field().find_generator(); }

}  // namespace

Functional unit_functional(const NumberField& F, const UnitGroup& U, const EUnits& E, const PrimeIdeal& v, u64 p,
                           std::optional<FqElement> g) {
  Functional out;
  out.v = v;
  out.p = p;
  out.generator = g ? *g : default_generator(v);
  const auto base = generator_characters(F, U, v, p, out.generator);
  for (const auto& k : E.exponents) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      acc = floor_mod(acc + floor_mod(k[j], static_cast<std::int64_t>(p)) * static_cast<std::int64_t>(base[j]),
                      static_cast<std::int64_t>(p));
    }
    out.values.push_back(static_cast<u64>(acc));
  }
  return out;
}

Functional full_unit_functional(const NumberField& F, const UnitGroup& U, const PrimeIdeal& v, u64 p,
                                std::optional<FqElement> g) {
  Functional out;
  out.v = v;
  out.p = p;
  out.generator = g ? *g : default_generator(v);
  const auto base = generator_characters(F, U, v, p, out.generator);
  const bool torsion = U.w % static_cast<std::int64_t>(p) == 0;
  for (std::size_t j = torsion ? 0 : 1; j < base.size(); ++j) out.values.push_back(base[j]);
  return out;
}

std::vector<PrimeIdeal> scan_t1(const NumberField& F, const Integer& modulus_norm, u64 p, std::size_t budget) {
  std::vector<PrimeIdeal> out;
  const Integer avoid = modulus_norm * p;
  for (u64 ell = 2; out.size() < budget; ell = next_prime(ell)) {
    if (F.discriminant() % ell == 0 || avoid % ell == 0) continue;
    for (auto& v : factor_prime(F, ell)) {
      if (v.norm == 0 || v.norm > kScanResidueCap || (v.norm - 1) % p != 0) continue;
      out.push_back(std::move(v));
      if (out.size() == budget) break;
    }
  }
  return out;
}

TpResult compute_tp(const NumberField& F, const UnitGroup& U, const EUnits& E, const Integer& modulus_norm, u64 p,
                    int expected, std::size_t budget) {
  TpResult out;
  out.expected = expected;
  const auto r = static_cast<Eigen::Index>(E.rank());
  FpRowSpace span(p, r);
  if (r > 0) {
    for (const auto& v : scan_t1(F, modulus_norm, p, budget)) {
      out.scanned.push_back(unit_functional(F, U, E, v, p));
      if (span.insert(out.scanned.back().as_vector())) out.certificate.push_back(out.scanned.size() - 1);
      if (span.rank() == r) break;
    }
  }
  out.t_p = static_cast<int>(span.rank());
  out.shortfall = out.t_p < expected;
  return out;
}

SpanningSet spanning_set(const NumberField& F, const UnitGroup& U, u64 p, std::size_t budget) {
  SpanningSet out;
  const int rp = compute_rp(F, p);
  out.matrix = FpMatrix(p, 0, rp);
  FpRowSpace span(p, rp);
  for (const auto& v : scan_t1(F, Integer(1), p, budget)) {
    if (span.rank() == rp) break;
    ++out.scanned;
    Functional phi = full_unit_functional(F, U, v, p);
    if (span.insert(phi.as_vector())) {
      out.matrix.append_row(phi.as_vector());
      out.primes.push_back(std::move(phi));
    }
  }
  out.complete = span.rank() == rp;
  return out;
}

MultiVector degree_two_pullback(const PrimeIdeal& v, const EUnits& E, u64 p) {
  if ((v.norm - 1) % p != 0) throw CharacterUndefined("degree_two_pullback: p does not divide N(v) - 1");
  return MultiVector(p, static_cast<unsigned>(E.rank()), 2);
}

}  // namespace dhecke
