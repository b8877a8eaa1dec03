#pragma once

// Exact integer linear algebra on Eigen containers: Smith and Hermite normal
// forms, integer kernels, and Bareiss determinants. Everything is templated on
// the scalar so the same code runs on Integer and on std::int64_t.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dhecke/core/integer.hpp"

namespace dhecke {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// D = U * M * V with D diagonal, d_1 | d_2 | ..., d_i >= 0; U, V unimodular.
template <typename Scalar>
struct SmithForm {
  DenseMatrix<Scalar> U;
  DenseMatrix<Scalar> D;
  DenseMatrix<Scalar> V;

  Eigen::Index rank() const {
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) {
      if (D(i, i) != 0) ++r;
    }
    return r;
  }

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
bool find_min_pivot(const DenseMatrix<Scalar>& a, Eigen::Index t, Eigen::Index& pi,
                    Eigen::Index& pj) {
  bool found = false;
  Scalar best = 0;
  for (Eigen::Index j = t; j < a.cols(); ++j) {
    for (Eigen::Index i = t; i < a.rows(); ++i) {
      if (a(i, j) == 0) continue;
      Scalar v = abs_value(a(i, j));
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace detail

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithForm<Scalar> out{DenseMatrix<Scalar>::Identity(rows, rows), m, DenseMatrix<Scalar>::Identity(cols, cols)};
  auto& a = out.D;
  const Eigen::Index steps = std::min(rows, cols);

  for (Eigen::Index t = 0; t < steps; ++t) {
    while (true) {
      Eigen::Index pi = t, pj = t;
      if (!detail::find_min_pivot(a, t, pi, pj)) return out;
      if (pi != t) {
        a.row(pi).swap(a.row(t));
        out.U.row(pi).swap(out.U.row(t));
      }
      if (pj != t) {
        a.col(pj).swap(a.col(t));
        out.V.col(pj).swap(out.V.col(t));
      }
      const Scalar pivot = a(t, t);
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = floor_div(a(i, t), pivot);
        a.row(i) -= q * a.row(t);
        out.U.row(i) -= q * out.U.row(t);
        if (a(i, t) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = floor_div(a(t, j), pivot);
        a.col(j) -= q * a.col(t);
        out.V.col(j) -= q * out.V.col(t);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Enforce divisibility of the trailing block by the pivot.
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = t + 1; i < rows && bad_row < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (a(i, j) % pivot != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      a.row(t) += a.row(bad_row);
      out.U.row(t) += out.U.row(bad_row);
    }
    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      out.U.row(t) = -out.U.row(t);
    }
  }
  return out;
}

/// Determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  DenseMatrix<Scalar> a = m;
  Scalar sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Column-style Hermite normal form of the full-rank lattice spanned by the
/// columns of `gens` (n rows). The result H is n x n upper triangular with
/// positive diagonal and 0 <= H(i, j) < H(i, i) for j > i, so H(0, 0) spans the
/// intersection of the lattice with the first coordinate axis.
///
/// If `modulus` is given, modulus * Z^n must lie inside the lattice; entries
/// are then kept reduced modulo it during elimination.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> hermite_normal_form(
    const Eigen::MatrixBase<Derived>& gens,
    const std::optional<typename Derived::Scalar>& modulus = std::nullopt) {
  using Scalar = typename Derived::Scalar;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index n = gens.rows();
  std::vector<Vec> pool;
  pool.reserve(static_cast<std::size_t>(gens.cols() + n));
  auto reduce = [&](Vec& v) {
    if (!modulus) return;
    for (Eigen::Index i = 0; i < n; ++i) v(i) = floor_mod(v(i), *modulus);
  };
  for (Eigen::Index j = 0; j < gens.cols(); ++j) {
    Vec v = gens.col(j);
    reduce(v);
    if (!v.isZero()) pool.push_back(std::move(v));
  }
  if (modulus) {
    for (Eigen::Index i = 0; i < n; ++i) {
      Vec v = Vec::Zero(n);
      v(i) = *modulus;
      pool.push_back(std::move(v));
    }
  }

  DenseMatrix<Scalar> h = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    while (true) {
      std::ptrdiff_t best = -1;
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (pool[k](j) == 0) continue;
        if (best < 0 || abs_value(pool[k](j)) < abs_value(pool[static_cast<std::size_t>(best)](j))) {
          best = static_cast<std::ptrdiff_t>(k);
        }
      }
      if (best < 0) throw std::invalid_argument("hermite_normal_form: lattice is not full rank");
      const Vec pivot = pool[static_cast<std::size_t>(best)];
      bool others = false;
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (static_cast<std::ptrdiff_t>(k) == best || pool[k](j) == 0) continue;
        const Scalar q = floor_div(pool[k](j), pivot(j));
        pool[k] -= q * pivot;
        if (modulus) {
          // Only coordinates below j may be reduced; coordinate j must keep
          // its exact remainder so the Euclidean step makes progress.
          for (Eigen::Index i = 0; i < j; ++i) pool[k](i) = floor_mod(pool[k](i), *modulus);
        }
        if (pool[k](j) != 0) others = true;
      }
      if (others) continue;
      Vec col = pivot;
      if (col(j) < 0) col = -col;
      h.col(j) = col;
      pool.erase(pool.begin() + best);
      pool.erase(std::remove_if(pool.begin(), pool.end(), [](const Vec& v) { return v.isZero(); }),
                 pool.end());
      break;
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j - 1; i >= 0; --i) {
      const Scalar q = floor_div(h(i, j), h(i, i));
      if (q != 0) h.col(j) -= q * h.col(i);
    }
  }
  return h;
}

/// Basis (as columns) of the integer kernel {x : A x = 0}.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> integer_kernel(const Eigen::MatrixBase<Derived>& a) {
  auto snf = smith_normal_form(a);
  const Eigen::Index r = snf.rank();
  return snf.V.rightCols(a.cols() - r);
}

/// HNF basis of {x in Z^m : A x ∈ diag(moduli) Z^k}, where A is k x m.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> kernel_modulo(
    const Eigen::MatrixBase<Derived>& a, const std::vector<typename Derived::Scalar>& moduli) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index k = a.rows(), m = a.cols();
  if (static_cast<Eigen::Index>(moduli.size()) != k) {
    throw std::invalid_argument("kernel_modulo: modulus count mismatch");
  }
  DenseMatrix<Scalar> b = DenseMatrix<Scalar>::Zero(k, m + k);
  b.leftCols(m) = a;
  for (Eigen::Index i = 0; i < k; ++i) b(i, m + i) = moduli[static_cast<std::size_t>(i)];
  DenseMatrix<Scalar> ker = integer_kernel(b);
  return hermite_normal_form(ker.topRows(m));
}

}  // namespace dhecke
