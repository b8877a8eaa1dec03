#include "dhecke/number_field/ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "dhecke/core/errors.hpp"
#include "dhecke/kernel/lattice.hpp"

namespace dhecke {

namespace {

IdealHNF from_hnf(IntMatrix h) {
  IdealHNF out;
  out.norm = 1;
  for (Eigen::Index i = 0; i < h.rows(); ++i) out.norm *= h(i, i);
  out.basis = std::move(h);
  return out;
}

std::vector<Element> basis_elements(const IdealHNF& a) {
  std::vector<Element> out;
  for (Eigen::Index j = 0; j < a.basis.cols(); ++j) out.push_back(a.basis.col(j));
  return out;
}

}  // namespace

bool ideal_less(const IdealHNF& a, const IdealHNF& b) {
  for (Eigen::Index i = 0; i < a.basis.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.basis.cols(); ++j) {
      if (a.basis(i, j) != b.basis(i, j)) return a.basis(i, j) < b.basis(i, j);
    }
  }
  return false;
}

IdealHNF unit_ideal(const NumberField& F) {
  return from_hnf(IntMatrix::Identity(F.degree(), F.degree()));
}

IdealHNF integer_ideal(const NumberField& F, const Integer& m) {
  if (m <= 0) throw std::invalid_argument("integer_ideal: m must be positive");
  IntMatrix h = IntMatrix::Identity(F.degree(), F.degree()) * m;
  return from_hnf(std::move(h));
}

IdealHNF ideal_from_generators(const NumberField& F, const std::vector<Element>& gens,
                               std::optional<Integer> multiple) {
  const int n = F.degree();
  if (!multiple) {
    for (const auto& g : gens) {
      if (!g.isZero()) {
        multiple = abs_value(F.norm(g));
        break;
      }
    }
    if (!multiple) throw std::invalid_argument("ideal_from_generators: zero ideal");
  }
  IntMatrix cols(n, static_cast<Eigen::Index>(gens.size()) * n);
  Eigen::Index k = 0;
  for (const auto& g : gens) {
    const IntMatrix m = F.mul_matrix(g);
    for (int j = 0; j < n; ++j) cols.col(k++) = m.col(j);
  }
  return from_hnf(hermite_normal_form(cols, std::optional<Integer>(abs_value(*multiple))));
}

IdealHNF principal_ideal(const NumberField& F, const Element& a) {
  if (a.isZero()) throw std::invalid_argument("principal_ideal: zero element");
  return ideal_from_generators(F, {a}, abs_value(F.norm(a)));
}

IdealHNF ideal_product(const NumberField& F, const IdealHNF& a, const IdealHNF& b) {
  if (a.is_unit_ideal()) return b;
  if (b.is_unit_ideal()) return a;
  std::vector<Element> gens;
  for (const auto& x : basis_elements(a)) {
    for (const auto& y : basis_elements(b)) gens.push_back(F.mul(x, y));
  }
  return ideal_from_generators(F, gens, a.min_integer() * b.min_integer());
}

IdealHNF ideal_power(const NumberField& F, const IdealHNF& a, unsigned k) {
  IdealHNF out = unit_ideal(F);
  for (unsigned i = 0; i < k; ++i) out = ideal_product(F, out, a);
  return out;
}

IdealHNF ideal_sum(const NumberField& F, const IdealHNF& a, const IdealHNF& b) {
  std::vector<Element> gens = basis_elements(a);
  for (const auto& y : basis_elements(b)) gens.push_back(y);
  return ideal_from_generators(F, gens, gcd(a.min_integer(), b.min_integer()));
}

bool ideals_coprime(const NumberField& F, const IdealHNF& a, const IdealHNF& b) {
  if (gcd(a.norm, b.norm) == 1) return true;
  return ideal_sum(F, a, b).is_unit_ideal();
}

bool ideal_contains(const IdealHNF& a, const Element& x) {
  Element rest = x;
  for (Eigen::Index i = a.basis.rows() - 1; i >= 0; --i) {
    if (rest(i) % a.basis(i, i) != 0) return false;
    const Integer c = rest(i) / a.basis(i, i);
    if (c != 0) rest -= c * a.basis.col(i);
  }
  return true;
}

bool ideal_subset(const IdealHNF& a, const IdealHNF& b) {
  if (a.norm % b.norm != 0) return false;
  for (Eigen::Index j = 0; j < a.basis.cols(); ++j) {
    if (!ideal_contains(b, a.basis.col(j))) return false;
  }
  return true;
}

IdealHNF scaled_inverse(const NumberField& F, const IdealHNF& b) {
  const int n = F.degree();
  if (b.is_unit_ideal()) return b;
  IntMatrix a(n * n, n);
  for (int k = 0; k < n; ++k) a.middleRows(k * n, n) = F.mul_matrix(b.basis.col(k));
  std::vector<Integer> moduli(static_cast<std::size_t>(n * n), b.norm);
  return from_hnf(kernel_modulo(a, moduli));
}

std::vector<PrimeIdeal> prime_decomposition(const NumberField& F, u64 ell) {
  if (!is_prime(ell)) throw std::invalid_argument("prime_decomposition: not a prime");
  if (F.discriminant() % ell == 0 && !F.order_is_maximal()) {
    throw RamifiedOrIndexPrime("prime " + std::to_string(ell) + " divides disc(min_poly)");
  }
  std::vector<PrimeIdeal> out;
  for (auto& [g, e] : factor_poly_mod_ell(F.min_poly(), ell)) {
    PrimeIdeal v;
    v.ell = ell;
    v.f = static_cast<unsigned>(g.degree());
    v.e = e;
    v.g_poly = g;
    std::vector<Integer> gc(g.c.begin(), g.c.end());
    v.ideal = ideal_from_generators(F, {F.from_int(Integer(ell)), F.evaluate_at_theta(gc)}, Integer(ell));
    v.norm = v.ideal.norm <= Integer(u64{1} << 62) ? v.ideal.norm.convert_to<u64>() : 0;
    if (v.ideal.norm != ipow(Integer(ell), v.f)) throw std::logic_error("prime_decomposition: unexpected norm");
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<PrimeIdeal> factor_prime(const NumberField& F, u64 ell) {
  if (F.discriminant() % ell == 0) {
    throw RamifiedOrIndexPrime("prime " + std::to_string(ell) + " divides disc(min_poly)");
  }
  return prime_decomposition(F, ell);
}

FqElement residue_image(const NumberField& F, const Element& x, const PrimeIdeal& v, const FiniteField& kv) {
  (void)F;
  std::vector<u64> c(static_cast<std::size_t>(x.size()));
  const Integer m(v.ell);
  for (Eigen::Index i = 0; i < x.size(); ++i) c[static_cast<std::size_t>(i)] = floor_mod(x(i), m).convert_to<u64>();
  return kv.from_coords(std::move(c));
}

FqElement residue_image(const NumberField& F, const Element& x, const PrimeIdeal& v) {
  return residue_image(F, x, v, v.residue_field());
}

std::vector<std::pair<PrimeIdeal, unsigned>> factor_ideal(const NumberField& F, const IdealHNF& a) {
  std::vector<std::pair<PrimeIdeal, unsigned>> out;
  if (a.is_unit_ideal()) return out;
  const u64 norm = a.norm.convert_to<u64>();
  Integer covered = 1;
  for (const auto& [ell, exp] : factor_trial(norm)) {
    (void)exp;
    for (auto& v : prime_decomposition(F, ell)) {
      unsigned k = 0;
      IdealHNF power = v.ideal;
      while (ideal_subset(a, power)) {
        ++k;
        power = ideal_product(F, power, v.ideal);
      }
      if (k > 0) {
        covered *= ipow(Integer(v.norm), k);
        out.emplace_back(std::move(v), k);
      }
    }
  }
  if (covered != a.norm) throw std::logic_error("factor_ideal: ideal is not a product of the listed primes");
  return out;
}

std::vector<FactoredIdeal> ideals_up_to_norm(const NumberField& F, u64 bound) {
  std::vector<PrimeIdeal> primes;
  for (u64 ell = 2; ell <= bound; ell = next_prime(ell)) {
    if (F.discriminant() % ell == 0 && !F.order_is_maximal()) continue;
    for (auto& v : prime_decomposition(F, ell)) {
      if (v.norm != 0 && v.norm <= bound) primes.push_back(std::move(v));
    }
  }
  std::vector<FactoredIdeal> out;
  std::function<void(std::size_t, const FactoredIdeal&, u64)> extend = [&](std::size_t start, const FactoredIdeal& cur, u64 norm) {
    out.push_back(cur);
    for (std::size_t i = start; i < primes.size(); ++i) {
      FactoredIdeal next = cur;
      u64 next_norm = norm;
      unsigned k = 0;
      while (next_norm <= bound / primes[i].norm) {
        next_norm *= primes[i].norm;
        next.ideal = ideal_product(F, next.ideal, primes[i].ideal);
        ++k;
        FactoredIdeal branch = next;
        branch.factors.emplace_back(primes[i], k);
        extend(i + 1, branch, next_norm);
      }
    }
  };
  extend(0, FactoredIdeal{unit_ideal(F), {}}, 1);
  std::sort(out.begin(), out.end(), [](const FactoredIdeal& a, const FactoredIdeal& b) {
    if (a.ideal.norm != b.ideal.norm) return a.ideal.norm < b.ideal.norm;
    return ideal_less(a.ideal, b.ideal);
  });
  return out;
}

std::string ideal_to_string(const IdealHNF& a) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < a.basis.rows(); ++i) {
    os << (i ? "," : "") << "[";
    for (Eigen::Index j = 0; j < a.basis.cols(); ++j) os << (j ? "," : "") << a.basis(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace dhecke
