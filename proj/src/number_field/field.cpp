#include "dhecke/number_field/field.hpp"

#include <sstream>
#include <stdexcept>

#include "dhecke/core/errors.hpp"
#include "dhecke/kernel/lattice.hpp"

namespace dhecke {

Integer poly_discriminant(const std::vector<Integer>& poly) {
  const int n = static_cast<int>(poly.size()) - 1;
  if (n < 1) throw std::invalid_argument("poly_discriminant: degree must be positive");
  std::vector<Integer> der;
  for (int i = 1; i <= n; ++i) der.push_back(poly[static_cast<std::size_t>(i)] * i);
  const int m = n - 1;
  // Sylvester matrix of f (degree n) and f' (degree m).
  IntMatrix s = IntMatrix::Zero(n + m, n + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) s(i, i + j) = poly[static_cast<std::size_t>(n - j)];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) s(m + i, i + j) = der[static_cast<std::size_t>(m - j)];
  }
  Integer res = m + n == 0 ? Integer(1) : determinant(s);
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return res;
}

NumberField::NumberField(FieldDescriptor descriptor) : d_(std::move(descriptor)) {
  n_ = d_.degree();
  if (n_ < 2) throw ValidationError("min_poly: degree must be at least 2");
  if (d_.min_poly.back() != 1) throw ValidationError("min_poly: polynomial is not monic");
  if (d_.r1 < 0 || d_.r2 < 0 || d_.r1 + 2 * d_.r2 != n_) {
    throw ValidationError("signature: r1 + 2 r2 does not equal the degree");
  }
  if ((d_.r1 == 1 && d_.r2 == 0) || (d_.r1 == 0 && d_.r2 == 1)) {
    throw ValidationError("signature: Q and imaginary quadratic fields are not supported");
  }
  disc_ = poly_discriminant(d_.min_poly);
  if (disc_ == 0) throw ValidationError("min_poly: polynomial is not square-free");
  try {
    roots_ = isolate_real_roots(d_.min_poly);
  } catch (const std::invalid_argument&) {
    throw ValidationError("min_poly: polynomial has a rational root");
  }
  if (static_cast<int>(roots_.size()) != d_.r1) {
    throw ValidationError("signature: r1 does not match the number of real roots");
  }
  // θ^k in the power basis, using θ^n = -(c_0 + ... + c_{n-1} θ^{n-1}).
  powers_.reserve(static_cast<std::size_t>(2 * n_ - 1));
  for (int k = 0; k < n_; ++k) {
    Element e = Element::Zero(n_);
    e(k) = 1;
    powers_.push_back(e);
  }
  for (int k = n_; k < 2 * n_ - 1; ++k) {
    const Element& prev = powers_.back();
    Element next = Element::Zero(n_);
    for (int i = 0; i + 1 < n_; ++i) next(i + 1) = prev(i);
    const Integer top = prev(n_ - 1);
    if (top != 0) {
      for (int i = 0; i < n_; ++i) next(i) -= top * d_.min_poly[static_cast<std::size_t>(i)];
    }
    powers_.push_back(next);
  }
}

Element NumberField::theta() const {
  Element e = zero();
  e(1) = 1;
  return e;
}

Element NumberField::from_int(const Integer& a) const {
  Element e = zero();
  e(0) = a;
  return e;
}

Element NumberField::from_coeffs(const std::vector<Integer>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > n_) throw std::invalid_argument("from_coeffs: too many coordinates");
  Element e = zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) e(static_cast<Eigen::Index>(i)) = coeffs[i];
  return e;
}

Element NumberField::evaluate_at_theta(const std::vector<Integer>& g) const {
  Element acc = zero();
  for (std::size_t i = g.size(); i-- > 0;) {
    acc = mul(acc, theta());
    acc(0) += g[i];
  }
  return acc;
}

Element NumberField::mul(const Element& a, const Element& b) const {
  Element out = zero();
  for (int i = 0; i < n_; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (b(j) == 0) continue;
      const Integer c = a(i) * b(j);
      const Element& pw = powers_[static_cast<std::size_t>(i + j)];
      for (int k = 0; k < n_; ++k) {
        if (pw(k) != 0) out(k) += c * pw(k);
      }
    }
  }
  return out;
}

Element NumberField::pow(const Element& a, std::uint64_t e) const {
  Element result = one();
  Element b = a;
  while (e) {
    if (e & 1U) result = mul(result, b);
    e >>= 1U;
    if (e) b = mul(b, b);
  }
  return result;
}

IntMatrix NumberField::mul_matrix(const Element& a) const {
  IntMatrix m(n_, n_);
  for (int j = 0; j < n_; ++j) m.col(j) = mul(a, powers_[static_cast<std::size_t>(j)]);
  return m;
}

Integer NumberField::norm(const Element& a) const { return determinant(mul_matrix(a)); }

Integer NumberField::trace(const Element& a) const { return mul_matrix(a).trace(); }

std::optional<Element> NumberField::divide(const Element& a, const Element& b) const {
  const IntMatrix m = mul_matrix(b);
  const Integer det = determinant(m);
  if (det == 0) throw std::domain_error("divide: division by zero");
  // Cramer's rule: y_i = det(m with column i replaced by a) / det.
  Element y(n_);
  for (int i = 0; i < n_; ++i) {
    IntMatrix mi = m;
    mi.col(i) = a;
    const Integer num = determinant(mi);
    if (num % det != 0) return std::nullopt;
    y(i) = num / det;
  }
  return y;
}

Element NumberField::unit_inverse(const Element& a) const {
  auto inv = divide(one(), a);
  if (!inv) throw std::invalid_argument("unit_inverse: element is not a unit");
  return *inv;
}

Element NumberField::unit_power(const Element& a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  return pow(unit_inverse(a), static_cast<std::uint64_t>(-e));
}

std::vector<int> NumberField::real_signs(const Element& a) const {
  if (a.isZero()) throw std::invalid_argument("real_signs: zero element");
  std::vector<Integer> g(a.data(), a.data() + a.size());
  std::vector<int> out;
  out.reserve(roots_.size());
  for (const auto& iv : roots_) out.push_back(sign_at_root(d_.min_poly, iv, g));
  return out;
}

std::string element_to_string(const Element& a) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < a.size(); ++i) os << (i ? "," : "") << a(i);
  os << ")";
  return os.str();
}

}  // namespace dhecke
