#include "dhecke/ray_class/ray_class.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dhecke/core/errors.hpp"
#include "dhecke/kernel/modular.hpp"

namespace dhecke {

namespace {

// Primes above ℓ usable for representatives: coprime to `avoid`, and away
// from the discriminant unless the order is maximal.
std::vector<PrimeIdeal> usable_primes(const NumberField& F, u64 ell, const Integer& avoid) {
  if (avoid % ell == 0) return {};
  if (F.discriminant() % ell == 0) {
    if (!F.order_is_maximal()) return {};
    return prime_decomposition(F, ell);
  }
  return factor_prime(F, ell);
}

}  // namespace

IdealClassGroup::IdealClassGroup(const NumberField& F, const Integer& avoid, std::optional<std::int64_t> target,
                                 u64 prime_bound, PrincipalSearchConfig cfg)
    : F_(&F), cfg_(cfg) {
  reps_.push_back(unit_ideal(F));
  inverses_.push_back(unit_ideal(F));
  auto done = [&] { return target && static_cast<std::int64_t>(reps_.size()) >= *target; };
  for (u64 ell = 2; ell <= prime_bound && !done(); ell = next_prime(ell)) {
    for (const auto& P : usable_primes(F, ell, avoid)) {
      if (P.norm == 0 || (!target && P.norm > prime_bound)) continue;
      adjoin(P.ideal);
      if (done()) break;
    }
  }
  if (target && static_cast<std::int64_t>(reps_.size()) != *target) {
    throw ValidationError("class_number " + std::to_string(*target) + " does not match the " +
                          std::to_string(reps_.size()) + " classes found among primes up to " +
                          std::to_string(prime_bound));
  }
}

void IdealClassGroup::adjoin(const IdealHNF& P) {
  if (try_locate(P)) return;
  const std::vector<IdealHNF> subgroup = reps_;
  IdealHNF power = P;
  while (!try_locate(power)) {
    for (const auto& R : subgroup) {
      IdealHNF X = ideal_product(*F_, R, power);
      inverses_.push_back(scaled_inverse(*F_, X));
      reps_.push_back(std::move(X));
    }
    power = ideal_product(*F_, power, P);
  }
}

std::optional<ClassLocation> IdealClassGroup::try_locate(const IdealHNF& a) const {
  bool undecided = false;
  std::size_t undecided_index = 0;
  for (std::size_t j = 0; j < reps_.size(); ++j) {
    const auto r = principal_generator(*F_, ideal_product(*F_, a, inverses_[j]), cfg_);
    if (r.status == PrincipalStatus::found) return ClassLocation{j, r.generator};
    if (r.status == PrincipalStatus::inconclusive && !undecided) {
      undecided = true;
      undecided_index = j;
    }
  }
  if (undecided) {
    throw Inconclusive("principal test undecided for " + ideal_to_string(a) + " against representative " +
                       ideal_to_string(reps_[undecided_index]));
  }
  return std::nullopt;
}

ClassLocation IdealClassGroup::locate(const IdealHNF& a) const {
  auto loc = try_locate(a);
  if (!loc) throw std::logic_error("ideal class of " + ideal_to_string(a) + " is not among the representatives");
  return *loc;
}

std::int64_t class_number_real_quadratic(const NumberField& F) {
  if (F.degree() != 2 || F.r1() != 2 || !F.order_is_maximal()) {
    throw std::invalid_argument("class_number_real_quadratic: needs a native real quadratic field");
  }
  const Integer D = abs_value(F.discriminant());
  const u64 bound = static_cast<u64>(to_i64(isqrt(D / 4)));
  return static_cast<std::int64_t>(IdealClassGroup(F, Integer(1), std::nullopt, bound).size());
}

FieldDescriptor real_quadratic_descriptor(std::int64_t d) {
  const Element eps = fundamental_unit_real_quadratic(d);
  FieldDescriptor fd;
  fd.label = "Q(sqrt(" + std::to_string(d) + "))";
  if (d % 4 == 1) {
    fd.min_poly = {Integer(-(d - 1) / 4), Integer(-1), Integer(1)};
  } else {
    fd.min_poly = {Integer(-d), Integer(0), Integer(1)};
  }
  fd.r1 = 2;
  fd.r2 = 0;
  fd.torsion_order = 2;
  fd.torsion_generator = {Integer(-1)};
  fd.fundamental_units = {{eps(0), eps(1)}};
  fd.provenance = Provenance::native;
  fd.class_number = class_number_real_quadratic(NumberField(fd));
  return fd;
}

RayClassGroup::RayClassGroup(const NumberField& F, const CongruenceSignGroup& C, const UnitImage& image,
                             PrincipalSearchConfig cfg)
    : F_(&F),
      C_(&C),
      cokernel_(image.cokernel),
      classes_(F, C.modulus().norm, F.descriptor().class_number, 100000, cfg) {
  const auto& wide = classes_.representatives();
  for (const auto& b : wide) norm_images_.push_back(C.raw_image(F.from_int(b.norm)));
  cocycle_.assign(wide.size(), std::vector<Key>(wide.size()));
  for (std::size_t a = 0; a < wide.size(); ++a) {
    for (std::size_t b = 0; b < wide.size(); ++b) cocycle_[a][b] = key_of(ideal_product(F, wide[a], wide[b]));
  }

  const Integer target_big = Integer(classes_.size()) * cokernel_.order();
  if (target_big > Integer(1) << 24) throw CapExceeded("ray class group: h+ = " + target_big.str() + " is too large");
  const auto target = static_cast<std::size_t>(to_i64(target_big));
  auto insert = [&](IdealHNF ideal, Key key) {
    index_.emplace(key, reps_.size());
    reps_.push_back(std::move(ideal));
    keys_.push_back(std::move(key));
  };
  insert(unit_ideal(F), key_of(unit_ideal(F)));
  if (keys_[0].wide != 0 || keys_[0].q != cokernel_.identity()) {
    throw std::logic_error("ray class group: (1) is not the identity class");
  }

  const Integer avoid = C.modulus().norm;
  const u64 single_bound = std::max<u64>(200, 20 * target);
  std::vector<PrimeIdeal> primes;
  for (u64 ell = 2; ell <= single_bound; ell = next_prime(ell)) {
    for (auto& P : usable_primes(F, ell, avoid)) {
      if (P.norm != 0 && P.norm <= single_bound) primes.push_back(std::move(P));
    }
  }
  std::stable_sort(primes.begin(), primes.end(),
                   [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.norm < b.norm; });
  // Single primes first, by ascending norm, so representatives stay small.
  // Their classes generate the group; the rest is a breadth-first closure
  // under multiplication by them.
  std::vector<std::size_t> gens;
  for (const auto& P : primes) {
    if (reps_.size() == target) break;
    Key k = key_of(P.ideal);
    if (!index_.count(k)) {
      gens.push_back(reps_.size());
      insert(P.ideal, std::move(k));
    }
  }
  for (std::size_t i = 0; i < reps_.size() && reps_.size() < target; ++i) {
    for (auto g : gens) {
      Key k = combine(keys_[i], keys_[g]);
      if (!index_.count(k)) insert(ideal_product(F, reps_[i], reps_[g]), std::move(k));
    }
  }
  if (reps_.size() != target) {
    throw std::logic_error("ray class group: found " + std::to_string(reps_.size()) + " of " +
                           std::to_string(target) + " classes");
  }
  inverse_.resize(target);
  for (std::size_t i = 0; i < target; ++i) inverse_[i] = power(i, static_cast<std::int64_t>(target) - 1);
  std::vector<std::size_t> all(target);
  for (std::size_t i = 0; i < target; ++i) all[i] = i;
  structure_ = enumerate_abelian_group(target, target, 0, all, [this](std::size_t a, std::size_t b) { return mul(a, b); });
}

std::vector<std::int64_t> RayClassGroup::quotient_coords(const Element& gamma, std::size_t wide) const {
  return cokernel_.reduce(IntVector(C_->raw_image(gamma) - norm_images_[wide]));
}

RayClassGroup::Key RayClassGroup::key_of(const IdealHNF& a) const {
  if (!ideals_coprime(*F_, a, C_->modulus())) {
    throw std::invalid_argument("class_of: " + ideal_to_string(a) + " is not coprime to the modulus");
  }
  const auto loc = classes_.locate(a);
  return Key{loc.index, quotient_coords(loc.generator, loc.index)};
}

RayClassGroup::Key RayClassGroup::combine(const Key& a, const Key& b) const {
  const Key& c = cocycle_[a.wide][b.wide];
  return Key{c.wide, cokernel_.add(cokernel_.add(a.q, b.q), c.q)};
}

std::size_t RayClassGroup::class_of(const IdealHNF& a) const { return index_.at(key_of(a)); }

std::size_t RayClassGroup::mul(std::size_t a, std::size_t b) const {
  return index_.at(combine(keys_[a], keys_[b]));
}

std::size_t RayClassGroup::power(std::size_t a, std::int64_t k) const {
  k = floor_mod(k, static_cast<std::int64_t>(order()));
  std::size_t result = 0, base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

}  // namespace dhecke
