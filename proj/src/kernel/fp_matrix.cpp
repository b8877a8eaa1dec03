#include "dhecke/kernel/fp_matrix.hpp"

#include <stdexcept>

namespace dhecke {

FpMatrix::FpMatrix(u64 p, Eigen::Index rows, Eigen::Index cols)
    : p_(p), a_(FpEntries::Zero(rows, cols)) {
  if (!is_prime(p)) throw std::invalid_argument("FpMatrix: modulus is not prime");
}

FpMatrix::FpMatrix(u64 p, const FpEntries& entries) : p_(p), a_(entries) {
  if (!is_prime(p)) throw std::invalid_argument("FpMatrix: modulus is not prime");
  for (Eigen::Index i = 0; i < a_.rows(); ++i) {
    for (Eigen::Index j = 0; j < a_.cols(); ++j) a_(i, j) = static_cast<std::int64_t>(reduce_signed(a_(i, j), p_));
  }
}

void FpMatrix::set(Eigen::Index i, Eigen::Index j, std::int64_t v) {
  a_(i, j) = static_cast<std::int64_t>(reduce_signed(v, p_));
}

void FpMatrix::append_row(const FpVector& row) {
  if (row.size() != a_.cols()) throw std::invalid_argument("FpMatrix: row length mismatch");
  a_.conservativeResize(a_.rows() + 1, Eigen::NoChange);
  for (Eigen::Index j = 0; j < row.size(); ++j) set(a_.rows() - 1, j, row(j));
}

FpVector FpMatrix::apply(const FpVector& x) const {
  FpVector y(a_.rows());
  for (Eigen::Index i = 0; i < a_.rows(); ++i) {
    u64 acc = 0;
    for (Eigen::Index j = 0; j < a_.cols(); ++j) {
      acc = addmod(acc, mulmod(static_cast<u64>(a_(i, j)), reduce_signed(x(j), p_), p_), p_);
    }
    y(i) = static_cast<std::int64_t>(acc);
  }
  return y;
}

RankKernel fp_rank_kernel(const FpMatrix& m) {
  const u64 p = m.modulus();
  FpEntries a = m.entries();
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(r));
    const u64 inv = invmod(static_cast<u64>(a(r, c)), p);
    for (Eigen::Index j = 0; j < cols; ++j) a(r, j) = static_cast<std::int64_t>(mulmod(static_cast<u64>(a(r, j)), inv, p));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const u64 f = static_cast<u64>(a(i, c));
      for (Eigen::Index j = 0; j < cols; ++j) {
        a(i, j) = static_cast<std::int64_t>(submod(static_cast<u64>(a(i, j)), mulmod(f, static_cast<u64>(a(r, j)), p), p));
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  RankKernel out;
  out.rank = r;
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    FpVector v = FpVector::Zero(cols);
    v(free) = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      v(pivot_cols[k]) = static_cast<std::int64_t>(submod(0, static_cast<u64>(a(static_cast<Eigen::Index>(k), free)), p));
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

bool FpRowSpace::insert(const FpVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("FpRowSpace: dimension mismatch");
  FpVector w(dim_);
  for (Eigen::Index j = 0; j < dim_; ++j) w(j) = static_cast<std::int64_t>(reduce_signed(v(j), p_));
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto c = pivots_[k];
    if (w(c) == 0) continue;
    const u64 f = static_cast<u64>(w(c));
    for (Eigen::Index j = 0; j < dim_; ++j) {
      w(j) = static_cast<std::int64_t>(submod(static_cast<u64>(w(j)), mulmod(f, static_cast<u64>(rows_[k](j)), p_), p_));
    }
  }
  Eigen::Index piv = -1;
  for (Eigen::Index j = 0; j < dim_; ++j) {
    if (w(j) != 0) {
      piv = j;
      break;
    }
  }
  if (piv < 0) return false;
  const u64 inv = invmod(static_cast<u64>(w(piv)), p_);
  for (Eigen::Index j = 0; j < dim_; ++j) w(j) = static_cast<std::int64_t>(mulmod(static_cast<u64>(w(j)), inv, p_));
  // Keep existing rows reduced at the new pivot.
  for (auto& row : rows_) {
    if (row(piv) == 0) continue;
    const u64 f = static_cast<u64>(row(piv));
    for (Eigen::Index j = 0; j < dim_; ++j) {
      row(j) = static_cast<std::int64_t>(submod(static_cast<u64>(row(j)), mulmod(f, static_cast<u64>(w(j)), p_), p_));
    }
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

}  // namespace dhecke
