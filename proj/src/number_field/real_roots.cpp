#include "dhecke/number_field/real_roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace dhecke {

namespace {

using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly to_rational(const std::vector<Integer>& poly) {
  RPoly p;
  p.reserve(poly.size());
  for (const auto& c : poly) p.emplace_back(c);
  trim(p);
  return p;
}

RPoly derivative(const RPoly& p) {
  RPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

RPoly remainder(RPoly a, const RPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Rational evaluate(const RPoly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<RPoly> sturm_sequence(const std::vector<Integer>& poly) {
  std::vector<RPoly> seq{to_rational(poly)};
  seq.push_back(derivative(seq[0]));
  while (!seq.back().empty()) {
    RPoly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

int variations(const std::vector<RPoly>& seq, const Rational& t) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    const int s = sign_of(evaluate(p, t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sign_at(const std::vector<Integer>& poly, const Rational& t) {
  return sign_of(evaluate(to_rational(poly), t));
}

int sturm_count(const std::vector<Integer>& poly, const Rational& a, const Rational& b) {
  const auto seq = sturm_sequence(poly);
  return variations(seq, a) - variations(seq, b);
}

std::vector<RootInterval> isolate_real_roots(const std::vector<Integer>& poly) {
  const RPoly p = to_rational(poly);
  if (p.size() < 2) return {};
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational q = p[i] / p.back();
    if (q < 0) q = -q;
    bound = std::max(bound, q);
  }
  bound += 1;
  const auto seq = sturm_sequence(poly);
  std::vector<RootInterval> out;
  std::vector<RootInterval> stack{{-bound, bound}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    const int n = variations(seq, iv.lo) - variations(seq, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (sign_of(evaluate(p, mid)) == 0) {
      throw std::invalid_argument("isolate_real_roots: polynomial has a rational root");
    }
    stack.push_back({iv.lo, mid});
    stack.push_back({mid, iv.hi});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo > b.lo; });
  return out;
}

void refine(const std::vector<Integer>& poly, RootInterval& iv) {
  const RPoly p = to_rational(poly);
  const Rational mid = (iv.lo + iv.hi) / 2;
  const int s_mid = sign_of(evaluate(p, mid));
  if (s_mid == 0) throw std::invalid_argument("refine: polynomial has a rational root");
  if (s_mid == sign_of(evaluate(p, iv.lo))) {
    iv.lo = mid;
  } else {
    iv.hi = mid;
  }
}

int sign_at_root(const std::vector<Integer>& poly, RootInterval iv, const std::vector<Integer>& g) {
  RPoly gq = to_rational(g);
  if (gq.empty()) return 0;
  while (true) {
    // Exact interval Horner evaluation of g over [lo, hi].
    Rational vlo = gq.back(), vhi = gq.back();
    for (std::size_t k = gq.size() - 1; k-- > 0;) {
      const Rational c[4] = {vlo * iv.lo, vlo * iv.hi, vhi * iv.lo, vhi * iv.hi};
      vlo = *std::min_element(c, c + 4) + gq[k];
      vhi = *std::max_element(c, c + 4) + gq[k];
    }
    if (vlo > 0) return 1;
    if (vhi < 0) return -1;
    refine(poly, iv);
  }
}

}  // namespace dhecke
