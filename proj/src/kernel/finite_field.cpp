#include "dhecke/kernel/finite_field.hpp"

#include <map>
#include <stdexcept>

#include "dhecke/core/errors.hpp"

namespace dhecke {

namespace {

// Conway polynomials, little-endian coefficients.
const std::map<std::pair<u64, unsigned>, std::vector<u64>>& conway_table() {
  static const std::map<std::pair<u64, unsigned>, std::vector<u64>> table{
      {{2, 1}, {1, 1}},       {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 1}, {1, 1}},       {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},       {{5, 2}, {2, 4, 1}},    {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},       {{7, 2}, {3, 6, 1}},    {{7, 3}, {4, 0, 6, 1}},    {{7, 4}, {3, 4, 5, 0, 1}},
  };
  return table;
}

u64 checked_power(u64 base, unsigned e) {
  constexpr u64 limit = u64{1} << 62;
  u64 q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > limit / base) throw CapExceeded("finite field order exceeds 2^62");
    q *= base;
  }
  return q;
}

}  // namespace

bool FqElement::is_zero() const {
  for (auto c : coords) {
    if (c != 0) return false;
  }
  return true;
}

FiniteField::FiniteField(u64 ell, const PolyFp& modulus) : ell_(ell), g_(monic(modulus)) {
  if (!is_prime(ell)) throw std::invalid_argument("FiniteField: characteristic is not prime");
  if (modulus.ell != ell || g_.degree() < 1) throw std::invalid_argument("FiniteField: bad modulus");
  if (!is_irreducible(g_)) throw std::invalid_argument("FiniteField: modulus is reducible");
  f_ = static_cast<unsigned>(g_.degree());
  q_ = checked_power(ell, f_);
}

FiniteField FiniteField::prime_field(u64 ell) { return FiniteField(ell, PolyFp::x(ell)); }

FiniteField FiniteField::extension(u64 p, unsigned k) {
  if (k == 0) throw std::invalid_argument("FiniteField::extension: degree must be positive");
  auto it = conway_table().find({p, k});
  if (it != conway_table().end()) return FiniteField(p, PolyFp(p, it->second));
  const u64 count = checked_power(p, k);
  for (u64 code = 0; code < count; ++code) {
    std::vector<u64> c(k + 1, 0);
    u64 rest = code;
    for (unsigned i = 0; i < k; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    c[k] = 1;
    PolyFp g(p, std::move(c));
    if (is_irreducible(g)) return FiniteField(p, g);
  }
  throw std::logic_error("FiniteField::extension: no irreducible polynomial found");
}

FqElement FiniteField::reduce(const PolyFp& p) const {
  PolyFp r = p % g_;
  FqElement out{ell_, std::vector<u64>(f_, 0)};
  for (std::size_t i = 0; i < r.c.size(); ++i) out.coords[i] = r.c[i];
  return out;
}

PolyFp FiniteField::lift(const FqElement& a) const { return PolyFp(ell_, a.coords); }

FqElement FiniteField::zero() const { return FqElement{ell_, std::vector<u64>(f_, 0)}; }

FqElement FiniteField::one() const { return from_int(1); }

FqElement FiniteField::from_int(std::int64_t a) const {
  FqElement out = zero();
  out.coords[0] = reduce_signed(a, ell_);
  return out;
}

FqElement FiniteField::from_coords(std::vector<u64> coords) const {
  return reduce(PolyFp(ell_, std::move(coords)));
}

FqElement FiniteField::from_encoding(u64 code) const {
  FqElement out = zero();
  for (unsigned i = 0; i < f_; ++i) {
    out.coords[i] = code % ell_;
    code /= ell_;
  }
  return out;
}

u64 FiniteField::encoding(const FqElement& x) const {
  u64 code = 0;
  for (unsigned i = f_; i-- > 0;) code = code * ell_ + x.coords[i];
  return code;
}

FqElement FiniteField::add(const FqElement& a, const FqElement& b) const {
  FqElement out = zero();
  for (unsigned i = 0; i < f_; ++i) out.coords[i] = addmod(a.coords[i], b.coords[i], ell_);
  return out;
}

FqElement FiniteField::sub(const FqElement& a, const FqElement& b) const {
  FqElement out = zero();
  for (unsigned i = 0; i < f_; ++i) out.coords[i] = submod(a.coords[i], b.coords[i], ell_);
  return out;
}

FqElement FiniteField::neg(const FqElement& a) const { return sub(zero(), a); }

FqElement FiniteField::mul(const FqElement& a, const FqElement& b) const {
  if (f_ == 1) return FqElement{ell_, {mulmod(a.coords[0], b.coords[0], ell_)}};
  return reduce(lift(a) * lift(b));
}

FqElement FiniteField::pow(const FqElement& a, u64 e) const {
  FqElement result = one();
  FqElement b = a;
  while (e) {
    if (e & 1U) result = mul(result, b);
    e >>= 1U;
    if (e) b = mul(b, b);
  }
  return result;
}

FqElement FiniteField::inv(const FqElement& a) const {
  if (a.is_zero()) throw std::domain_error("FiniteField: inverse of zero");
  return pow(a, q_ - 2);
}

const std::vector<std::pair<u64, unsigned>>& FiniteField::unit_group_factors() const {
  if (factors_.empty() && q_ > 2) factors_ = factor_trial(q_ - 1);
  return factors_;
}

u64 FiniteField::multiplicative_order(const FqElement& a) const {
  if (a.is_zero()) throw std::domain_error("FiniteField: order of zero");
  u64 order = q_ - 1;
  for (const auto& [r, e] : unit_group_factors()) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow(a, order / r) == one()) {
        order /= r;
      } else {
        break;
      }
    }
  }
  return order;
}

bool FiniteField::is_generator(const FqElement& a) const {
  if (a.is_zero()) return false;
  for (const auto& [r, e] : unit_group_factors()) {
    (void)e;
    if (pow(a, (q_ - 1) / r) == one()) return false;
  }
  return true;
}

FqElement FiniteField::find_generator() const {
  if (q_ > 1000000000ULL) throw CapExceeded("generator search requires q <= 10^9");
  if (q_ == 2) return one();
  for (u64 code = 2; code < q_; ++code) {
    FqElement x = from_encoding(code);
    if (is_generator(x)) return x;
  }
  throw std::logic_error("FiniteField: no generator found");
}

FqElement FiniteField::element_of_order(u64 m) const {
  if (m == 0 || (q_ - 1) % m != 0) throw std::invalid_argument("element_of_order: m must divide q - 1");
  if (m == 1) return one();
  const auto m_factors = factor_trial(m);
  for (u64 code = 1; code < q_; ++code) {
    FqElement y = pow(from_encoding(code), (q_ - 1) / m);
    bool exact = true;
    for (const auto& [r, e] : m_factors) {
      (void)e;
      if (pow(y, m / r) == one()) {
        exact = false;
        break;
      }
    }
    if (exact) return y;
  }
  throw std::logic_error("FiniteField: no element of the requested order");
}

PthCharacter::PthCharacter(const FiniteField& field, u64 p, const FqElement& g)
    : field_(&field), p_(p) {
  const u64 q = field.order();
  if (p < 2 || (q - 1) % p != 0) throw CharacterUndefined("p does not divide q - 1");
  if (q > 1000000000ULL) throw CapExceeded("character evaluation requires q <= 10^9");
  if (!field.is_generator(g)) throw GeneratorError("element does not generate the multiplicative group");
  exponent_ = (q - 1) / p;
  zeta_ = field.pow(g, exponent_);
  FqElement power = field.one();
  for (u64 k = 0; k < p; ++k) {
    dlog_.emplace(field.encoding(power), k);
    power = field.mul(power, zeta_);
  }
}

u64 PthCharacter::operator()(const FqElement& x) const {
  if (x.is_zero()) throw std::domain_error("pth_character: zero has no character value");
  auto it = dlog_.find(field_->encoding(field_->pow(x, exponent_)));
  if (it == dlog_.end()) throw std::logic_error("pth_character: power is not a p-th root of unity");
  return it->second;
}

u64 pth_character(const FiniteField& field, const FqElement& x, u64 p, const FqElement& g) {
  return PthCharacter(field, p, g)(x);
}

}  // namespace dhecke
