#include "dhecke/kernel/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace dhecke {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

std::uint64_t colex_rank(std::uint64_t mask) {
  std::uint64_t rank = 0;
  unsigned seen = 0;
  for (unsigned bit = 0; mask >> bit; ++bit) {
    if ((mask >> bit) & 1U) {
      ++seen;
      rank += binomial(bit, seen);
    }
  }
  return rank;
}

std::uint64_t colex_unrank(std::uint64_t rank, unsigned k) {
  std::uint64_t mask = 0;
  for (unsigned i = k; i >= 1; --i) {
    unsigned c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    mask |= (std::uint64_t{1} << c);
  }
  return mask;
}

MultiVector::MultiVector(u64 p, unsigned rank, unsigned degree)
    : p_(p), rank_(rank), degree_(degree), coords_(binomial(rank, degree), 0) {
  if (rank >= 63) throw std::invalid_argument("MultiVector: rank too large");
}

MultiVector MultiVector::basis(u64 p, unsigned rank, std::uint64_t mask) {
  if (rank < 64 && (mask >> rank) != 0) throw std::invalid_argument("MultiVector: index out of range");
  MultiVector v(p, rank, static_cast<unsigned>(std::popcount(mask)));
  v.coords_[colex_rank(mask)] = 1 % static_cast<std::int64_t>(p);
  return v;
}

MultiVector MultiVector::scalar(u64 p, unsigned rank, std::int64_t c) {
  MultiVector v(p, rank, 0);
  v.set(0, c);
  return v;
}

MultiVector MultiVector::from_linear(u64 p, const FpVector& coords) {
  MultiVector v(p, static_cast<unsigned>(coords.size()), 1);
  for (Eigen::Index i = 0; i < coords.size(); ++i) v.set(static_cast<std::size_t>(i), coords(i));
  return v;
}

std::int64_t MultiVector::coeff_of_mask(std::uint64_t mask) const {
  if (static_cast<unsigned>(std::popcount(mask)) != degree_) return 0;
  return coords_[colex_rank(mask)];
}

void MultiVector::set(std::size_t index, std::int64_t value) {
  coords_.at(index) = static_cast<std::int64_t>(reduce_signed(value, p_));
}

bool MultiVector::is_zero() const {
  for (auto c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

void MultiVector::check_compatible(const MultiVector& other) const {
  if (p_ != other.p_ || rank_ != other.rank_ || degree_ != other.degree_) {
    throw std::invalid_argument("MultiVector: incompatible operands");
  }
}

MultiVector& MultiVector::operator+=(const MultiVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = static_cast<std::int64_t>(addmod(static_cast<u64>(coords_[i]), static_cast<u64>(other.coords_[i]), p_));
  }
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = static_cast<std::int64_t>(submod(static_cast<u64>(coords_[i]), static_cast<u64>(other.coords_[i]), p_));
  }
  return *this;
}

MultiVector MultiVector::scaled(std::int64_t c) const {
  MultiVector out = *this;
  const u64 f = reduce_signed(c, p_);
  for (auto& x : out.coords_) x = static_cast<std::int64_t>(mulmod(static_cast<u64>(x), f, p_));
  return out;
}

int shuffle_sign(std::uint64_t s, std::uint64_t t) {
  unsigned inversions = 0;
  for (std::uint64_t rest = t; rest; rest &= rest - 1) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(rest));
    // Elements of s strictly greater than this element of t.
    inversions += static_cast<unsigned>(std::popcount(s >> (bit + 1)));
  }
  return (inversions & 1U) ? -1 : 1;
}

MultiVector wedge(const MultiVector& u, const MultiVector& w) {
  if (u.modulus() != w.modulus() || u.rank() != w.rank()) {
    throw std::invalid_argument("wedge: incompatible operands");
  }
  const unsigned r = u.rank();
  const unsigned deg = u.degree() + w.degree();
  const u64 p = u.modulus();
  MultiVector out(p, r, deg);
  if (deg > r) return out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.coeff(i) == 0) continue;
    const std::uint64_t s = colex_unrank(i, u.degree());
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w.coeff(j) == 0) continue;
      const std::uint64_t t = colex_unrank(j, w.degree());
      if (s & t) continue;
      u64 term = mulmod(static_cast<u64>(u.coeff(i)), static_cast<u64>(w.coeff(j)), p);
      if (shuffle_sign(s, t) < 0) term = submod(0, term, p);
      const std::size_t k = colex_rank(s | t);
      out.set(k, static_cast<std::int64_t>(addmod(static_cast<u64>(out.coeff(k)), term, p)));
    }
  }
  return out;
}

}  // namespace dhecke
