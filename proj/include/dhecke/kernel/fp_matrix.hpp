#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "dhecke/kernel/modular.hpp"

namespace dhecke {

using FpEntries = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using FpVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Dense matrix over F_p with entries kept in [0, p).
class FpMatrix {
 public:
  FpMatrix(u64 p, Eigen::Index rows, Eigen::Index cols);
  FpMatrix(u64 p, const FpEntries& entries);

  u64 modulus() const { return p_; }
  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }
  const FpEntries& entries() const { return a_; }

  std::int64_t operator()(Eigen::Index i, Eigen::Index j) const { return a_(i, j); }
  void set(Eigen::Index i, Eigen::Index j, std::int64_t v);

  /// Append a row (values reduced mod p).
  void append_row(const FpVector& row);

  FpVector apply(const FpVector& x) const;

 private:
  u64 p_;
  FpEntries a_;
};

struct RankKernel {
  Eigen::Index rank = 0;
  /// Basis of the right kernel, one vector per entry.
  std::vector<FpVector> kernel_basis;
};

RankKernel fp_rank_kernel(const FpMatrix& m);

inline Eigen::Index fp_rank(const FpMatrix& m) { return fp_rank_kernel(m).rank; }

/// Incremental row-echelon basis used for rank accumulation.
class FpRowSpace {
 public:
  FpRowSpace(u64 p, Eigen::Index dim) : p_(p), dim_(dim) {}

  /// Inserts v; returns true iff it increased the rank.
  bool insert(const FpVector& v);
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index dimension() const { return dim_; }

 private:
  u64 p_;
  Eigen::Index dim_;
  std::vector<FpVector> rows_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace dhecke
