#include "dhecke/units/units.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dhecke/core/errors.hpp"
#include "dhecke/kernel/lattice.hpp"
#include "dhecke/kernel/modular.hpp"

namespace dhecke {

namespace {

// Generators are expanded for the congruence check only below this total
// exponent; past it the defining congruence on images is the check.
constexpr std::int64_t kExpandLimit = 4096;

}  // namespace

std::vector<Element> UnitGroup::generators() const {
  std::vector<Element> out{zeta};
  out.insert(out.end(), fundamental.begin(), fundamental.end());
  return out;
}

UnitGroup unit_group(const NumberField& F) {
  const auto& d = F.descriptor();
  UnitGroup U;
  if (d.torsion_order < 1) throw ValidationError("torsion_order must be positive");
  if (static_cast<int>(d.torsion_generator.size()) > F.degree()) {
    throw ValidationError("torsion_generator has too many coordinates");
  }
  U.zeta = F.from_coeffs(d.torsion_generator);
  U.w = d.torsion_order;
  const auto w = static_cast<u64>(U.w);
  if (F.pow(U.zeta, w) != F.one()) throw ValidationError("torsion_generator^w is not 1");
  for (const auto& [q, k] : factor_trial(w)) {
    (void)k;
    if (F.pow(U.zeta, w / q) == F.one()) {
      throw ValidationError("torsion_generator has order smaller than " + std::to_string(w));
    }
  }
  if (static_cast<int>(d.fundamental_units.size()) != F.unit_rank()) {
    throw ValidationError("expected " + std::to_string(F.unit_rank()) + " fundamental units, got " +
                          std::to_string(d.fundamental_units.size()));
  }
  for (std::size_t i = 0; i < d.fundamental_units.size(); ++i) {
    if (static_cast<int>(d.fundamental_units[i].size()) > F.degree()) {
      throw ValidationError("fundamental unit " + std::to_string(i) + " has too many coordinates");
    }
    Element e = F.from_coeffs(d.fundamental_units[i]);
    if (abs_value(F.norm(e)) != 1) {
      throw ValidationError("fundamental unit " + std::to_string(i) + " does not have norm +-1");
    }
    U.fundamental.push_back(std::move(e));
  }
  return U;
}

Element fundamental_unit_real_quadratic(std::int64_t d) {
  if (d < 2) throw std::invalid_argument("fundamental_unit_real_quadratic: d must exceed 1");
  for (std::int64_t q = 2; q * q <= d; ++q) {
    if (d % (q * q) == 0) throw std::invalid_argument("fundamental_unit_real_quadratic: d not squarefree");
  }
  const bool one_mod_four = d % 4 == 1;
  const Integer D(d);
  const Integer s = isqrt(D);
  const Integer trace = one_mod_four ? 1 : 0;
  const Integer theta_norm = one_mod_four ? Integer(-(d - 1) / 4) : Integer(-d);
  // θ = (P + √d)/Q with Q | d - P².
  Integer P = one_mod_four ? 1 : 0;
  Integer Q = one_mod_four ? 2 : 1;
  Integer p1 = 1, p2 = 0, q1 = 0, q2 = 1;
  for (;;) {
    const Integer a = floor_div(P + s, Q);
    const Integer p = a * p1 + p2;
    const Integer q = a * q1 + q2;
    // p - q θ' with θ' = trace - θ.
    const Integer x = p - q * trace;
    const Integer n = x * x + trace * x * q + theta_norm * q * q;
    if (n == 1 || n == -1) {
      Element e(2);
      e << x, q;
      return e;
    }
    P = a * Q - P;
    Q = (D - P * P) / Q;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
}

int UnitImage::delta(std::uint64_t p) const {
  int count = 0;
  for (const auto& d : image_invariants) {
    if (d % p == 0) ++count;
  }
  return count;
}

UnitImage unit_image_in_modulus(const NumberField& F, const UnitGroup& U, const CongruenceSignGroup& C) {
  (void)F;
  const auto gens = U.generators();
  const auto m = static_cast<Eigen::Index>(gens.size());
  const auto k = static_cast<Eigen::Index>(C.raw_rank());
  UnitImage out;
  out.images = IntMatrix::Zero(k, m);
  for (Eigen::Index j = 0; j < m; ++j) out.images.col(j) = C.raw_image(gens[static_cast<std::size_t>(j)]);

  IntMatrix rel(k, k + m);
  rel.setZero();
  for (Eigen::Index i = 0; i < k; ++i) rel(i, i) = C.raw_moduli()[static_cast<std::size_t>(i)];
  rel.rightCols(m) = out.images;
  out.cokernel = AbelianPresentation(rel);

  if (k == 0) {
    out.kernel = IntMatrix::Identity(m, m);
  } else {
    out.kernel = kernel_modulo(out.images, C.raw_moduli());
  }
  const auto snf = smith_normal_form(out.kernel);
  out.index = 1;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Integer d = abs_value(snf.D(i, i));
    if (d == 0) throw std::logic_error("unit image: kernel lattice not full rank");
    out.index *= d;
    if (d != 1) out.image_invariants.push_back(d);
  }
  if (out.index * out.cokernel.order() != Integer(C.order())) {
    throw std::logic_error("unit image: index and cokernel order disagree");
  }
  return out;
}

Element unit_from_exponents(const NumberField& F, const UnitGroup& U, const std::vector<std::int64_t>& k) {
  const auto gens = U.generators();
  if (k.size() != gens.size()) throw std::invalid_argument("unit_from_exponents: length mismatch");
  Element acc = F.one();
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    std::int64_t e = k[j];
    if (j == 0) e = floor_mod(e, U.w);
    acc = F.mul(acc, F.unit_power(gens[j], e));
  }
  return acc;
}

EUnits e_units(const NumberField& F, const UnitGroup& U, const CongruenceSignGroup& C, const UnitImage& image,
               std::optional<std::uint64_t> p) {
  EUnits out;
  out.modulus = C.modulus();
  out.index = image.index;
  out.image_invariants = image.image_invariants;
  const IntMatrix& K = image.kernel;
  const Integer h00 = K(0, 0);
  if (Integer(U.w) % h00 != 0) throw std::logic_error("e_units: torsion row does not divide w");
  out.torsion_order = to_i64(Integer(U.w) / h00);
  if (p && out.torsion_order % static_cast<std::int64_t>(*p) == 0) {
    throw TorsionObstruction("E(N) contains a root of unity of order " + std::to_string(*p) +
                             "; the torus model needs a torsion-free E(N)");
  }
  for (Eigen::Index j = 1; j < K.cols(); ++j) {
    std::vector<std::int64_t> k;
    std::int64_t total = 0;
    for (Eigen::Index i = 0; i < K.rows(); ++i) {
      k.push_back(to_i64(K(i, j)));
      total += std::llabs(k.back());
    }
    std::optional<Element> value;
    if (total <= kExpandLimit) {
      Element eta = unit_from_exponents(F, U, k);
      for (int s : F.real_signs(eta)) {
        if (s < 0) throw std::logic_error("e_units: generator is not totally positive");
      }
      if (!ideal_contains(C.modulus(), eta - F.one())) {
        throw std::logic_error("e_units: generator is not 1 mod the modulus");
      }
      value = std::move(eta);
    }
    out.exponents.push_back(std::move(k));
    out.values.push_back(std::move(value));
  }
  return out;
}

int compute_rp(const NumberField& F, std::uint64_t p) {
  const auto w = F.descriptor().torsion_order;
  return F.unit_rank() + (w % static_cast<std::int64_t>(p) == 0 ? 1 : 0);
}

}  // namespace dhecke
