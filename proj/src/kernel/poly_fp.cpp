#include "dhecke/kernel/poly_fp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dhecke {

PolyFp::PolyFp(u64 modulus, std::vector<u64> coeffs) : ell(modulus), c(std::move(coeffs)) {
  for (auto& x : c) x %= ell;
  trim();
}

PolyFp PolyFp::from_integers(u64 modulus, const std::vector<Integer>& coeffs) {
  std::vector<u64> c(coeffs.size());
  const Integer m(modulus);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = floor_mod(coeffs[i], m).convert_to<u64>();
  return PolyFp(modulus, std::move(c));
}

PolyFp PolyFp::from_signed(u64 modulus, const std::vector<std::int64_t>& coeffs) {
  std::vector<u64> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = reduce_signed(coeffs[i], modulus);
  return PolyFp(modulus, std::move(c));
}

void PolyFp::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

u64 PolyFp::evaluate(u64 t) const {
  u64 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = addmod(mulmod(acc, t, ell), *it, ell);
  return acc;
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  std::vector<u64> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = addmod(a.coeff(i), b.coeff(i), a.ell);
  return PolyFp(a.ell, std::move(c));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  std::vector<u64> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = submod(a.coeff(i), b.coeff(i), a.ell);
  return PolyFp(a.ell, std::move(c));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  if (a.is_zero() || b.is_zero()) return PolyFp::zero(a.ell);
  std::vector<u64> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      c[i + j] = addmod(c[i + j], mulmod(a.c[i], b.c[j], a.ell), a.ell);
    }
  }
  return PolyFp(a.ell, std::move(c));
}

PolyFp scale(const PolyFp& a, u64 s) {
  std::vector<u64> c(a.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mulmod(a.c[i], s % a.ell, a.ell);
  return PolyFp(a.ell, std::move(c));
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw std::domain_error("PolyFp: division by zero");
  const u64 ell = a.ell;
  if (a.degree() < b.degree()) return {PolyFp::zero(ell), a};
  std::vector<u64> r = a.c;
  std::vector<u64> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const u64 inv = invmod(b.lead(), ell);
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = q.size(); k-- > 0;) {
    const u64 coef = mulmod(r[k + db], inv, ell);
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k + j] = submod(r[k + j], mulmod(coef, b.c[j], ell), ell);
    }
  }
  r.resize(db);
  return {PolyFp(ell, std::move(q)), PolyFp(ell, std::move(r))};
}

PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).second; }
PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).first; }

PolyFp monic(const PolyFp& a) {
  if (a.is_zero()) return a;
  return scale(a, invmod(a.lead(), a.ell));
}

PolyFp gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp x = a, y = b;
  while (!y.is_zero()) {
    PolyFp r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

PolyFp derivative(const PolyFp& a) {
  if (a.c.size() <= 1) return PolyFp::zero(a.ell);
  std::vector<u64> c(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) c[i - 1] = mulmod(a.c[i], i % a.ell, a.ell);
  return PolyFp(a.ell, std::move(c));
}

PolyFp powmod(const PolyFp& base, u64 e, const PolyFp& m) {
  PolyFp result = PolyFp::one(base.ell) % m;
  PolyFp b = base % m;
  while (e) {
    if (e & 1U) result = (result * b) % m;
    e >>= 1U;
    if (e) b = (b * b) % m;
  }
  return result;
}

bool is_irreducible(const PolyFp& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const PolyFp fm = monic(f);
  const PolyFp x = PolyFp::x(f.ell);
  // frob[i] = x^(ℓ^i) mod f.
  std::vector<PolyFp> frob{x % fm};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), f.ell, fm));
  if (!(frob[static_cast<std::size_t>(n)] == x % fm)) return false;
  for (const auto& [q, e] : factor_trial(static_cast<u64>(n))) {
    (void)e;
    const PolyFp g = gcd(fm, frob[static_cast<std::size_t>(n / static_cast<int>(q))] - x);
    if (!g.is_one()) return false;
  }
  return true;
}

bool factor_less(const PolyFp& a, const PolyFp& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const u64 ka = submod(0, a.coeff(static_cast<std::size_t>(i)), a.ell);
    const u64 kb = submod(0, b.coeff(static_cast<std::size_t>(i)), b.ell);
    if (ka != kb) return ka < kb;
  }
  return false;
}

namespace {

/// g(x) with g(x)^ℓ = f(x); requires f' = 0.
PolyFp pth_root(const PolyFp& f) {
  std::vector<u64> c;
  for (std::size_t i = 0; i < f.c.size(); i += f.ell) c.push_back(f.c[i]);
  return PolyFp(f.ell, std::move(c));
}

void distinct_degree(const PolyFp& f, std::vector<std::pair<PolyFp, unsigned>>& out) {
  const PolyFp x = PolyFp::x(f.ell);
  PolyFp rest = f;
  PolyFp h = x % rest;
  for (unsigned i = 1; 2 * static_cast<int>(i) <= rest.degree(); ++i) {
    h = powmod(h, f.ell, rest);
    PolyFp g = gcd(rest, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
}

void equal_degree(const PolyFp& f, unsigned d, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  const u64 ell = f.ell;
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  if (d == 1 && ell < 1000000) {
    for (u64 t = 0; t < ell; ++t) {
      if (f.evaluate(t) == 0) out.push_back(PolyFp(ell, {submod(0, t, ell), 1}));
    }
    return;
  }
  std::uniform_int_distribution<u64> coin(0, ell - 1);
  while (true) {
    std::vector<u64> ac(static_cast<std::size_t>(f.degree()));
    for (auto& v : ac) v = coin(rng);
    PolyFp a(ell, std::move(ac));
    if (a.degree() < 1) continue;
    PolyFp g = gcd(a, f);
    if (g.degree() <= 0) {
      PolyFp b;
      if (ell == 2) {
        PolyFp t = a, s = a;
        for (unsigned i = 1; i < d; ++i) {
          t = (t * t) % f;
          s = s + t;
        }
        b = s;
      } else {
        PolyFp t = a, s = a;
        for (unsigned i = 1; i < d; ++i) {
          t = powmod(t, ell, f);
          s = (s * t) % f;
        }
        b = powmod(s, (ell - 1) / 2, f) - PolyFp::one(ell);
      }
      g = gcd(b, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<PolyFp, unsigned>> squarefree_decomposition(const PolyFp& f) {
  std::vector<std::pair<PolyFp, unsigned>> out;
  if (f.degree() <= 0) return out;
  const PolyFp fp = derivative(f);
  if (fp.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(f))) {
      out.emplace_back(g, m * static_cast<unsigned>(f.ell));
    }
    return out;
  }
  PolyFp c = gcd(f, fp);
  PolyFp w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    PolyFp y = gcd(w, c);
    PolyFp z = w / y;
    if (z.degree() > 0) out.emplace_back(monic(z), i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(monic(c)))) {
      out.emplace_back(g, m * static_cast<unsigned>(f.ell));
    }
  }
  return out;
}

std::vector<std::pair<PolyFp, unsigned>> factor_poly_mod_ell(const PolyFp& f) {
  if (f.degree() < 1) throw std::invalid_argument("factor_poly_mod_ell: degree must be positive");
  if (f.lead() != 1) throw std::invalid_argument("factor_poly_mod_ell: polynomial must be monic");
  std::mt19937_64 rng(0x5eedULL + f.ell);
  std::vector<std::pair<PolyFp, unsigned>> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    std::vector<std::pair<PolyFp, unsigned>> by_degree;
    distinct_degree(part, by_degree);
    for (const auto& [g, d] : by_degree) {
      std::vector<PolyFp> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& piece : pieces) out.emplace_back(monic(piece), mult);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
  return out;
}

std::vector<std::pair<PolyFp, unsigned>> factor_poly_mod_ell(const std::vector<Integer>& f, u64 ell) {
  return factor_poly_mod_ell(PolyFp::from_integers(ell, f));
}

}  // namespace dhecke
