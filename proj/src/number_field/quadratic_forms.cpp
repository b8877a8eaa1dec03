#include "dhecke/number_field/quadratic_forms.hpp"

#include <set>
#include <stdexcept>

namespace dhecke {

bool is_reduced(const BinaryForm& f, const Integer& s) {
  const Integer two_a = 2 * abs_value(f.a);
  return f.b <= s && two_a - f.b <= s && s < two_a + f.b;
}

BinaryForm rho(const BinaryForm& f, const Integer& D, const Integer& s, Transform2* step) {
  if (f.c == 0) throw std::invalid_argument("rho: degenerate form");
  const Integer C = abs_value(f.c);
  const Integer two_c = 2 * C;
  Integer b_new;
  if (C * C > D) {
    b_new = floor_mod(Integer(-f.b), two_c);
    if (b_new > C) b_new -= two_c;
  } else {
    b_new = s - floor_mod(Integer(s + f.b), two_c);
  }
  const Integer t = (b_new + f.b) / (2 * f.c);
  if (step) {
    *step << Integer(0), Integer(-1), Integer(1), t;
  }
  return BinaryForm{f.c, b_new, (b_new * b_new - D) / (4 * f.c)};
}

FormCycle reduction_cycle(const BinaryForm& f) {
  const Integer D = f.discriminant();
  if (D <= 0) throw std::invalid_argument("reduction_cycle: discriminant must be positive");
  const Integer s = isqrt(D);
  if (s * s == D) throw std::invalid_argument("reduction_cycle: discriminant is a square");
  FormCycle out;
  BinaryForm cur = f;
  Transform2 m = Transform2::Identity();
  Transform2 step;
  for (int guard = 0; !is_reduced(cur, s); ++guard) {
    if (guard > 100000) throw std::logic_error("reduction_cycle: reduction did not terminate");
    out.approach.push_back(cur);
    out.approach_transforms.push_back(m);
    cur = rho(cur, D, s, &step);
    m = m * step;
  }
  const BinaryForm start = cur;
  for (int guard = 0;; ++guard) {
    if (guard > 10000000) throw std::logic_error("reduction_cycle: cycle did not close");
    out.forms.push_back(cur);
    out.transforms.push_back(m);
    cur = rho(cur, D, s, &step);
    m = m * step;
    if (cur == start) break;
  }
  return out;
}

std::optional<std::pair<Integer, Integer>> represent_unit(const BinaryForm& f) {
  const FormCycle cyc = reduction_cycle(f);
  auto check = [&](const BinaryForm& g, const Transform2& m) -> std::optional<std::pair<Integer, Integer>> {
    if (abs_value(g.a) != 1) return std::nullopt;
    // f(M (1, 0)^T) = g(1, 0) = g.a.
    return std::make_pair(m(0, 0), m(1, 0));
  };
  for (std::size_t i = 0; i < cyc.approach.size(); ++i) {
    if (auto r = check(cyc.approach[i], cyc.approach_transforms[i])) return r;
  }
  for (std::size_t i = 0; i < cyc.forms.size(); ++i) {
    if (auto r = check(cyc.forms[i], cyc.transforms[i])) return r;
  }
  return std::nullopt;
}

std::vector<BinaryForm> reduced_forms(const Integer& D) {
  const Integer s = isqrt(D);
  std::vector<BinaryForm> out;
  for (Integer b = 1; b <= s; ++b) {
    if ((b * b - D) % 4 != 0) continue;
    const Integer n = (D - b * b) / 4;
    // Reduced forms have 2|a| <= s + b <= 2s.
    for (Integer a = 1; a <= n && a <= s; ++a) {
      if (n % a != 0) continue;
      for (int sign : {1, -1}) {
        BinaryForm f{a * sign, b, -(n / a) * sign};
        if (is_reduced(f, s)) out.push_back(f);
      }
    }
  }
  return out;
}

std::size_t hplus_form_cycles(const Integer& D) {
  const Integer s = isqrt(D);
  if (D <= 0 || s * s == D) throw std::invalid_argument("hplus_form_cycles: D must be a positive non-square");
  const auto forms = reduced_forms(D);
  std::set<BinaryForm> unseen(forms.begin(), forms.end());
  std::size_t cycles = 0;
  while (!unseen.empty()) {
    const BinaryForm start = *unseen.begin();
    BinaryForm cur = start;
    do {
      unseen.erase(cur);
      cur = rho(cur, D, s);
    } while (!(cur == start));
    ++cycles;
  }
  return cycles;
}

}  // namespace dhecke
