#include "dhecke/ray_class/congruence.hpp"

#include <stdexcept>
#include <string>

#include "dhecke/core/errors.hpp"

namespace dhecke {

namespace {

std::int64_t mod_norm(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

const NumberField& within_cap(const NumberField& F, const IdealHNF& modulus, std::uint64_t cap) {
  if (modulus.norm > Integer(cap)) {
    throw CapExceeded("congruence group: N(modulus) = " + modulus.norm.str() + " exceeds the residue cap " +
                      std::to_string(cap));
  }
  return F;
}

}  // namespace

ResidueRing::ResidueRing(const NumberField& F, const IdealHNF& modulus) : n_(F.degree()) {
  if (modulus.norm > Integer(1) << 40) throw CapExceeded("residue ring: modulus norm too large");
  norm_ = to_i64(modulus.norm);
  hnf_.assign(static_cast<std::size_t>(n_ * n_), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) hnf_[static_cast<std::size_t>(i * n_ + j)] = to_i64(modulus.basis(i, j));
  }
  strides_.resize(static_cast<std::size_t>(n_));
  std::uint64_t s = 1;
  for (int i = 0; i < n_; ++i) {
    strides_[static_cast<std::size_t>(i)] = s;
    s *= static_cast<std::uint64_t>(hnf_[static_cast<std::size_t>(i * n_ + i)]);
  }
  size_ = s;
  Element pw = F.one();
  for (int k = 0; k < 2 * n_ - 1; ++k) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = to_i64(floor_mod(pw(i), Integer(norm_)));
    powers_.push_back(std::move(v));
    pw = F.mul(pw, F.theta());
  }
  one_ = id_of(F.one());
}

std::vector<std::int64_t> ResidueRing::canonical(std::vector<std::int64_t> v) const {
  for (auto& x : v) x = mod_norm(x, norm_);
  for (int i = n_ - 1; i >= 0; --i) {
    const std::int64_t h = hnf_[static_cast<std::size_t>(i * n_ + i)];
    const std::int64_t c = v[static_cast<std::size_t>(i)] / h;
    if (c == 0) continue;
    for (int r = 0; r <= i; ++r) {
      const __int128 t = static_cast<__int128>(c) * hnf_[static_cast<std::size_t>(r * n_ + i)];
      v[static_cast<std::size_t>(r)] =
          mod_norm(static_cast<std::int64_t>((v[static_cast<std::size_t>(r)] - t) % norm_), norm_);
    }
  }
  return v;
}

std::uint64_t ResidueRing::id_of(std::vector<std::int64_t> v) const {
  v = canonical(std::move(v));
  std::uint64_t id = 0;
  for (int i = 0; i < n_; ++i) id += static_cast<std::uint64_t>(v[static_cast<std::size_t>(i)]) * strides_[static_cast<std::size_t>(i)];
  return id;
}

std::uint64_t ResidueRing::id_of(const Element& x) const {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = to_i64(floor_mod(x(i), Integer(norm_)));
  return id_of(std::move(v));
}

std::vector<std::int64_t> ResidueRing::residue(std::uint64_t id) const {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const auto h = static_cast<std::uint64_t>(hnf_[static_cast<std::size_t>(i * n_ + i)]);
    v[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(id % h);
    id /= h;
  }
  return v;
}

Element ResidueRing::element(std::uint64_t id) const {
  const auto v = residue(id);
  Element e(n_);
  for (int i = 0; i < n_; ++i) e(i) = v[static_cast<std::size_t>(i)];
  return e;
}

std::uint64_t ResidueRing::mul(std::uint64_t a, std::uint64_t b) const {
  const auto x = residue(a);
  const auto y = residue(b);
  std::vector<__int128> acc(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[static_cast<std::size_t>(j)] == 0) continue;
      const std::int64_t c = static_cast<std::int64_t>(
          static_cast<__int128>(x[static_cast<std::size_t>(i)]) * y[static_cast<std::size_t>(j)] % norm_);
      const auto& pw = powers_[static_cast<std::size_t>(i + j)];
      for (int k = 0; k < n_; ++k) {
        acc[static_cast<std::size_t>(k)] =
            (acc[static_cast<std::size_t>(k)] + static_cast<__int128>(c) * pw[static_cast<std::size_t>(k)]) % norm_;
      }
    }
  }
  std::vector<std::int64_t> v(static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) v[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(acc[static_cast<std::size_t>(k)]);
  return id_of(std::move(v));
}

CongruenceSignGroup::CongruenceSignGroup(const NumberField& F, const IdealHNF& modulus, std::uint64_t residue_cap)
    : field_(&F),
      modulus_(modulus),
      ring_(within_cap(F, modulus, residue_cap), modulus),
      r1_(F.r1()) {
  if (!modulus.is_unit_ideal()) factors_ = factor_ideal(F, modulus);
  std::uint64_t order = 1;
  for (const auto& [P, k] : factors_) {
    factor_fields_.push_back(P.residue_field());
    std::uint64_t local = P.norm - 1;
    for (unsigned i = 1; i < k; ++i) local *= P.norm;
    order *= local;
  }
  units_order_ = order;
  const auto ids = unit_ids();
  if (ids.size() != units_order_) throw std::logic_error("congruence group: unit count mismatch");
  units_ = enumerate_abelian_group(
      static_cast<std::size_t>(ring_.size()), static_cast<std::size_t>(units_order_),
      static_cast<std::size_t>(ring_.one()), std::vector<std::size_t>(ids.begin(), ids.end()),
      [this](std::size_t a, std::size_t b) { return static_cast<std::size_t>(ring_.mul(a, b)); });
  for (auto d : units_.presentation.invariants()) moduli_.emplace_back(d);
  for (int i = 0; i < r1_; ++i) moduli_.emplace_back(2);
  const auto k = static_cast<Eigen::Index>(moduli_.size());
  IntMatrix rel = IntMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) rel(i, i) = moduli_[static_cast<std::size_t>(i)];
  full_ = AbelianPresentation(rel);
}

bool CongruenceSignGroup::is_residue_unit(const Element& x) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (residue_image(*field_, x, factors_[i].first, factor_fields_[i]).is_zero()) return false;
  }
  return true;
}

std::vector<std::uint64_t> CongruenceSignGroup::unit_ids() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t id = 0; id < ring_.size(); ++id) {
    if (is_residue_unit(ring_.element(id))) out.push_back(id);
  }
  return out;
}

IntVector CongruenceSignGroup::raw_image(const Element& x) const {
  if (!is_residue_unit(x)) throw std::invalid_argument("congruence group: element not coprime to the modulus");
  const auto& coords = units_.coordinates[static_cast<std::size_t>(ring_.id_of(x))];
  IntVector v(static_cast<Eigen::Index>(moduli_.size()));
  std::size_t i = 0;
  for (auto c : coords) v(static_cast<Eigen::Index>(i++)) = c;
  if (r1_ > 0) {
    for (int s : field_->real_signs(x)) v(static_cast<Eigen::Index>(i++)) = s < 0 ? 1 : 0;
  }
  return v;
}

}  // namespace dhecke
