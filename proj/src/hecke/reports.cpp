#include "dhecke/hecke/reports.hpp"

#include <map>
#include <numeric>

#include "dhecke/kernel/finite_field.hpp"
#include "dhecke/kernel/modular.hpp"

namespace dhecke {

Level::Level(const NumberField& F, const IdealHNF& modulus, std::uint64_t residue_cap, PrincipalSearchConfig cfg)
    : F_(&F),
      U_(unit_group(F)),
      C_(F, modulus, residue_cap),
      image_(unit_image_in_modulus(F, U_, C_)),
      G_(std::make_unique<RayClassGroup>(F, C_, image_, cfg)) {}

PsiReport psi_report(const Level& L, const EUnits& E, const TpResult& tp, u64 p) {
  const RayClassGroup& G = L.ray_classes();
  const std::size_t h = G.order();
  const auto r = static_cast<unsigned>(E.rank());
  PsiReport out;
  out.hypothesis_holds = L.unit_image().index % p != 0;

  const CohomologyClass one = CohomologyClass::indicator(p, r, h, 0);
  FpRowSpace h0(p, static_cast<Eigen::Index>(h));
  for (std::size_t g = 0; g < h; ++g) h0.insert(hecke_apply(G, HeckeElement::shift(p, r, g), one).flatten());
  out.dim_h0 = h0.rank();
  out.dim_h1 = static_cast<std::int64_t>(h) * r;

  const auto dim = static_cast<Eigen::Index>(h * r);
  FpRowSpace domain(p, dim), image(p, dim);
  if (r > 0) {
    for (const auto& phi : tp.scanned) {
      if (phi.is_zero()) continue;
      const MultiVector omega = MultiVector::from_linear(p, phi.as_vector());
      for (std::size_t g = 0; g < h; ++g) {
        const HeckeElement H = HeckeElement::term(g, omega);
        domain.insert(H.flatten(h));
        image.insert(hecke_apply(G, H, one).flatten());
      }
    }
  }
  out.dim_domain = domain.rank();
  out.dim_image = image.rank();
  out.is_isomorphism = out.dim_image == out.dim_h1 && out.dim_domain == out.dim_image;
  return out;
}

namespace {

std::int64_t strip_prime(std::int64_t d, u64 p) {
  while (d % static_cast<std::int64_t>(p) == 0) d /= static_cast<std::int64_t>(p);
  return d;
}

bool all_zero(const std::vector<FqElement>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

EigenReport eigensystem_report(const Level& L, const EUnits& E, const TpResult& tp, u64 p) {
  const RayClassGroup& G = L.ray_classes();
  const EnumeratedGroup& S = G.structure();
  const auto& d = S.presentation.invariants();
  const std::size_t h = G.order();
  const auto r = E.rank();

  std::vector<std::int64_t> dp;
  std::int64_t m = 1, e = 1;
  for (auto di : d) {
    dp.push_back(strip_prime(di, p));
    m *= dp.back();
    e = std::lcm(e, dp.back());
  }
  EigenReport out;
  out.extension_degree = e == 1 ? 1U : static_cast<unsigned>(multiplicative_order(p % static_cast<u64>(e), static_cast<u64>(e)));
  const FiniteField K = FiniteField::extension(p, out.extension_degree);
  out.field_order = K.order();
  const FqElement omega = K.element_of_order(static_cast<u64>(e));

  std::vector<std::size_t> prime_to_p;
  for (std::size_t g = 0; g < h; ++g) {
    if (G.power(g, m) == 0) prime_to_p.push_back(g);
  }
  // Generators of the p'-part: (d_i / d'_i) e_i.
  std::map<std::vector<std::int64_t>, std::size_t> by_coords;
  for (std::size_t g = 0; g < h; ++g) by_coords.emplace(S.coordinates[g], g);
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<std::int64_t> c(d.size(), 0);
    c[i] = d[i] / dp[i];
    gens.push_back(by_coords.at(c));
  }

  const Functional* witness = tp.t_p > 0 ? &tp.scanned[tp.certificate.front()] : nullptr;
  std::vector<std::int64_t> a(d.size(), 0);
  for (std::int64_t idx = 0; idx < m; ++idx) {
    std::int64_t rest = idx;
    for (std::size_t i = 0; i < d.size(); ++i) {
      a[i] = rest % dp[i];
      rest /= dp[i];
    }
    auto chi = [&](std::size_t g) {
      std::int64_t exp = 0;
      for (std::size_t i = 0; i < d.size(); ++i) exp = (exp + (e / dp[i]) * a[i] % e * S.coordinates[g][i]) % e;
      return K.pow(omega, static_cast<u64>(exp));
    };
    CharacterOccurrence occ;
    occ.exponents = a;
    // P_χ 1_1 = Σ_{g ∈ G_p'} χ(g)^{-1} T_g 1_1 and T_g 1_1 = 1_{g^{-1}}.
    std::vector<FqElement> w0(h, K.zero());
    for (auto g : prime_to_p) w0[G.inverse(g)] = K.add(w0[G.inverse(g)], K.inv(chi(g)));
    occ.in_h0 = !all_zero(w0);
    // T_s w0 = χ(s) w0, with (T_s w)(b) = w(s b).
    occ.eigenvector_checked = true;
    for (auto s : gens) {
      const FqElement lambda = chi(s);
      for (std::size_t b = 0; b < h; ++b) {
        if (!(w0[G.mul(s, b)] == K.mul(lambda, w0[b]))) occ.eigenvector_checked = false;
      }
    }
    // P_χ (1_1 ⊗ e_1) has w0(b) e_1 in component b.
    std::vector<FqElement> w1;
    for (std::size_t b = 0; b < h; ++b) {
      for (std::size_t i = 0; i < r; ++i) w1.push_back(i == 0 ? w0[b] : K.zero());
    }
    occ.in_h1 = !all_zero(w1);
    if (witness) {
      // (e, φ) w0 = φ ⊗ w0.
      std::vector<FqElement> hw;
      for (std::size_t b = 0; b < h; ++b) {
        for (auto phi_i : witness->values) hw.push_back(K.mul(K.from_int(static_cast<std::int64_t>(phi_i)), w0[b]));
      }
      occ.operator_witness = !all_zero(hw);
    }
    const bool matched = occ.eigenvector_checked && occ.in_h0 == occ.in_h1 && (!witness || occ.operator_witness);
    out.matched_both_degrees = out.matched_both_degrees && matched;
    out.characters.push_back(std::move(occ));
  }
  out.count = out.characters.size();
  return out;
}

}  // namespace dhecke
