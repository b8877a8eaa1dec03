#include "dhecke/kernel/abelian.hpp"

#include <stdexcept>

#include "dhecke/kernel/lattice.hpp"

namespace dhecke {

AbelianPresentation::AbelianPresentation(const IntMatrix& relations) {
  const Eigen::Index k = relations.rows();
  if (k == 0) {
    transform_ = IntMatrix(0, 0);
    return;
  }
  auto snf = smith_normal_form(relations);
  if (snf.rank() != k) throw std::invalid_argument("AbelianPresentation: relations not full rank");
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (snf.D(i, i) != 1) keep.push_back(i);
  }
  transform_ = IntMatrix(static_cast<Eigen::Index>(keep.size()), k);
  for (std::size_t r = 0; r < keep.size(); ++r) {
    transform_.row(static_cast<Eigen::Index>(r)) = snf.U.row(keep[r]);
    invariants_.push_back(to_i64(snf.D(keep[r], keep[r])));
  }
  // Keep the transform small: rows only matter modulo their invariant.
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (Eigen::Index j = 0; j < k; ++j) {
      auto& e = transform_(static_cast<Eigen::Index>(r), j);
      e = floor_mod(e, Integer(invariants_[r]));
    }
  }
}

Integer AbelianPresentation::order() const {
  Integer o = 1;
  for (auto d : invariants_) o *= d;
  return o;
}

std::vector<std::int64_t> AbelianPresentation::reduce(const IntVector& x) const {
  if (x.size() != transform_.cols()) throw std::invalid_argument("AbelianPresentation: bad length");
  std::vector<std::int64_t> out(invariants_.size());
  for (std::size_t r = 0; r < invariants_.size(); ++r) {
    Integer acc = 0;
    for (Eigen::Index j = 0; j < x.size(); ++j) acc += transform_(static_cast<Eigen::Index>(r), j) * x(j);
    out[r] = to_i64(floor_mod(acc, Integer(invariants_[r])));
  }
  return out;
}

std::vector<std::int64_t> AbelianPresentation::reduce(const std::vector<std::int64_t>& x) const {
  IntVector v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<Eigen::Index>(i)) = x[i];
  return reduce(v);
}

std::vector<std::int64_t> AbelianPresentation::add(const std::vector<std::int64_t>& a,
                                                   const std::vector<std::int64_t>& b) const {
  std::vector<std::int64_t> out(invariants_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) % invariants_[i];
  return out;
}

std::vector<std::int64_t> AbelianPresentation::negate(const std::vector<std::int64_t>& a) const {
  std::vector<std::int64_t> out(invariants_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (invariants_[i] - a[i]) % invariants_[i];
  return out;
}

EnumeratedGroup enumerate_abelian_group(
    std::size_t id_bound, std::size_t order, std::size_t identity,
    const std::vector<std::size_t>& candidates,
    const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  EnumeratedGroup g;
  g.member.assign(id_bound, 0);
  g.exponents.assign(id_bound, {});
  std::vector<std::size_t> members{identity};
  g.member[identity] = 1;
  std::vector<std::vector<std::int64_t>> relation_columns;

  for (std::size_t cand : candidates) {
    if (members.size() >= order) break;
    if (g.member[cand]) continue;
    // Smallest m >= 1 with cand^m inside the current subgroup.
    std::size_t power = cand;
    std::int64_t m = 1;
    std::vector<std::size_t> powers{identity, cand};
    while (!g.member[power]) {
      power = mul(power, cand);
      ++m;
      powers.push_back(power);
      if (static_cast<std::size_t>(m) > order) throw std::logic_error("enumerate_abelian_group: order overflow");
    }
    const std::size_t k = g.generators.size();
    std::vector<std::int64_t> rel = g.exponents[power];
    rel.resize(k + 1, 0);
    for (auto& e : rel) e = -e;
    rel[k] = m;
    for (auto& col : relation_columns) col.push_back(0);
    relation_columns.push_back(rel);
    g.generators.push_back(cand);
    for (auto id : members) g.exponents[id].push_back(0);

    std::vector<std::size_t> grown;
    grown.reserve(members.size() * static_cast<std::size_t>(m));
    for (auto id : members) grown.push_back(id);
    for (std::int64_t i = 1; i < m; ++i) {
      for (auto id : members) {
        std::size_t prod = mul(id, powers[static_cast<std::size_t>(i)]);
        if (g.member[prod]) throw std::logic_error("enumerate_abelian_group: inconsistent oracle");
        g.member[prod] = 1;
        auto e = g.exponents[id];
        e[k] = i;
        g.exponents[prod] = std::move(e);
        grown.push_back(prod);
      }
    }
    members = std::move(grown);
  }
  if (members.size() != order) throw std::logic_error("enumerate_abelian_group: candidates do not generate");

  const auto k = static_cast<Eigen::Index>(g.generators.size());
  IntMatrix rel(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < k; ++i) rel(i, j) = relation_columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  g.presentation = AbelianPresentation(rel);
  g.coordinates.assign(id_bound, {});
  for (auto id : members) g.coordinates[id] = g.presentation.reduce(g.exponents[id]);
  return g;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace dhecke
