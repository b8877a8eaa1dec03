#include "dhecke/number_field/principal.hpp"

#include <stdexcept>
#include <vector>

#include "dhecke/number_field/quadratic_forms.hpp"

namespace dhecke {

namespace {

PrincipalResult found(Element g) { return PrincipalResult{PrincipalStatus::found, std::move(g)}; }

PrincipalResult quadratic_generator(const NumberField& F, const IdealHNF& a) {
  // a = [A, b + cθ] with c | A and c | b; a = c · [A/c, b/c + θ].
  const Integer& A = a.basis(0, 0);
  const Integer& b = a.basis(0, 1);
  const Integer& c = a.basis(1, 1);
  if (A % c != 0 || b % c != 0) throw std::logic_error("principal_generator: ideal basis is not of ideal shape");
  const Integer a1 = A / c, b1 = b / c;
  const Integer& c0 = F.min_poly()[0];
  const Integer& c1 = F.min_poly()[1];
  Element gen = F.zero();
  if (a1 == 1) {
    gen(0) = c;
  } else {
    const Integer nb = b1 * b1 - c1 * b1 + c0;  // N(b1 + θ)
    if (nb % a1 != 0) throw std::logic_error("principal_generator: a does not divide N(b + θ)");
    const BinaryForm q{a1, 2 * b1 - c1, nb / a1};
    auto rep = represent_unit(q);
    if (!rep) return PrincipalResult{PrincipalStatus::not_found, {}};
    const auto& [x, y] = *rep;
    gen(0) = c * (x * a1 + y * b1);
    gen(1) = c * y;
  }
  if (principal_ideal(F, gen) != a) throw std::logic_error("principal_generator: generator check failed");
  return found(gen);
}

PrincipalResult box_search(const NumberField& F, const IdealHNF& a, const PrincipalSearchConfig& cfg) {
  const int n = F.degree();
  std::vector<std::int64_t> k(static_cast<std::size_t>(n));
  for (std::int64_t radius = 1; radius <= cfg.box_radius; ++radius) {
    // Visit the shell max|k_i| == radius in odometer order.
    std::fill(k.begin(), k.end(), -radius);
    while (true) {
      bool on_shell = false;
      for (auto v : k) on_shell = on_shell || v == radius || v == -radius;
      if (on_shell) {
        Element x = F.zero();
        for (int j = 0; j < n; ++j) x += Integer(k[static_cast<std::size_t>(j)]) * a.basis.col(j);
        if (!x.isZero() && abs_value(F.norm(x)) == a.norm) return found(x);
      }
      int pos = 0;
      while (pos < n && k[static_cast<std::size_t>(pos)] == radius) k[static_cast<std::size_t>(pos++)] = -radius;
      if (pos == n) break;
      ++k[static_cast<std::size_t>(pos)];
    }
  }
  return PrincipalResult{PrincipalStatus::inconclusive, {}};
}

}  // namespace

PrincipalResult principal_generator(const NumberField& F, const IdealHNF& a, const PrincipalSearchConfig& cfg) {
  if (a.is_unit_ideal()) return found(F.one());
  if (F.degree() == 2) return quadratic_generator(F, a);
  return box_search(F, a, cfg);
}

}  // namespace dhecke
