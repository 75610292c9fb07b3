#pragma once

#include "hqft/errors.hpp"
#include "hqft/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hqft {

/// Unimodular factorisation U * A * V = S with S diagonal, non-negative, and
/// d_1 | d_2 | ... on the leading `rank` diagonal entries. The inverses of U and
/// V are tracked alongside so callers can change coordinates in both
/// directions without re-solving.
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U, S, V;
  Matrix<Scalar> U_inv, V_inv;
  Eigen::Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    d.reserve(static_cast<size_t>(rank));
    for (Eigen::Index i = 0; i < rank; ++i) d.push_back(S(i, i));
    return d;
  }
};

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& v) {
  return v < 0 ? Scalar(-v) : v;
}

/// Row/column operation recorder. Every elementary operation on S is mirrored
/// on the transforms and their inverses.
template <typename Scalar>
class SmithWorkspace {
 public:
  explicit SmithWorkspace(const Matrix<Scalar>& A)
      : S(A),
        U(Matrix<Scalar>::Identity(A.rows(), A.rows())),
        V(Matrix<Scalar>::Identity(A.cols(), A.cols())),
        U_inv(Matrix<Scalar>::Identity(A.rows(), A.rows())),
        V_inv(Matrix<Scalar>::Identity(A.cols(), A.cols())) {}

  // row_i += q * row_j
  void add_row(Eigen::Index i, Eigen::Index j, const Scalar& q) {
    S.row(i) += q * S.row(j);
    U.row(i) += q * U.row(j);
    U_inv.col(j) -= q * U_inv.col(i);
  }
  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    S.row(i).swap(S.row(j));
    U.row(i).swap(U.row(j));
    U_inv.col(i).swap(U_inv.col(j));
  }
  void negate_row(Eigen::Index i) {
    S.row(i) = -S.row(i);
    U.row(i) = -U.row(i);
    U_inv.col(i) = -U_inv.col(i);
  }
  // col_i += q * col_j
  void add_col(Eigen::Index i, Eigen::Index j, const Scalar& q) {
    S.col(i) += q * S.col(j);
    V.col(i) += q * V.col(j);
    V_inv.row(j) -= q * V_inv.row(i);
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    S.col(i).swap(S.col(j));
    V.col(i).swap(V.col(j));
    V_inv.row(i).swap(V_inv.row(j));
  }

  Matrix<Scalar> S, U, V, U_inv, V_inv;
};

}  // namespace detail

/// Smith normal form with unimodular transforms. Pivots are chosen as the
/// non-zero entry of smallest magnitude in the active block, ties broken by
/// (row, column) order, so the output is a deterministic function of A.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& A) {
  using detail::magnitude;
  detail::SmithWorkspace<Scalar> w(A);
  const Eigen::Index m = A.rows(), n = A.cols();
  Eigen::Index t = 0;

  auto find_pivot = [&](Eigen::Index from) -> std::optional<std::pair<Eigen::Index, Eigen::Index>> {
    std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
    Scalar best_mag = 0;
    for (Eigen::Index i = from; i < m; ++i)
      for (Eigen::Index j = from; j < n; ++j) {
        if (w.S(i, j) == 0) continue;
        Scalar mag = magnitude(w.S(i, j));
        if (!best || mag < best_mag) {
          best = std::make_pair(i, j);
          best_mag = mag;
        }
      }
    return best;
  };

  while (t < m && t < n) {
    auto pivot = find_pivot(t);
    if (!pivot) break;
    for (;;) {
      w.swap_rows(t, pivot->first);
      w.swap_cols(t, pivot->second);
      const Scalar p = w.S(t, t);
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (w.S(i, t) == 0) continue;
        Scalar q = w.S(i, t) / p;
        if (q != 0) w.add_row(i, t, Scalar(-q));
        if (w.S(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (w.S(t, j) == 0) continue;
        Scalar q = w.S(t, j) / p;
        if (q != 0) w.add_col(j, t, Scalar(-q));
        if (w.S(t, j) != 0) clean = false;
      }
      if (!clean) {
        pivot = find_pivot(t);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the remaining block.
      std::optional<Eigen::Index> offending;
      for (Eigen::Index i = t + 1; i < m && !offending; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (w.S(i, j) % p != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      w.add_row(t, *offending, Scalar(1));
      pivot = std::make_pair(t, t);
    }
    if (w.S(t, t) < 0) w.negate_row(t);
    ++t;
  }

  SmithDecomposition<Scalar> out;
  out.U = std::move(w.U);
  out.S = std::move(w.S);
  out.V = std::move(w.V);
  out.U_inv = std::move(w.U_inv);
  out.V_inv = std::move(w.V_inv);
  out.rank = t;
  return out;
}

/// Integer solution of A x = b, or nullopt when none exists.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_integer(const SmithDecomposition<Scalar>& snf,
                                            const Matrix<Scalar>& A,
                                            const Vector<Scalar>& b) {
  if (b.size() != A.rows())
    throw DimensionError("solve_integer: right-hand side has length " + std::to_string(b.size()) +
                         ", matrix has " + std::to_string(A.rows()) + " rows");
  const Vector<Scalar> c = snf.U * b;
  Vector<Scalar> y = Vector<Scalar>::Zero(A.cols());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      const Scalar& d = snf.S(i, i);
      if (c(i) % d != 0) return std::nullopt;
      y(i) = c(i) / d;
    } else if (c(i) != 0) {
      return std::nullopt;
    }
  }
  Vector<Scalar> x = snf.V * y;
  if (A * x != b) throw InvariantViolation("solve_integer: back-substitution failed verification");
  return x;
}

template <typename Scalar>
std::optional<Vector<Scalar>> solve_integer(const Matrix<Scalar>& A, const Vector<Scalar>& b) {
  if (b.size() != A.rows())
    throw DimensionError("solve_integer: right-hand side has length " + std::to_string(b.size()) +
                         ", matrix has " + std::to_string(A.rows()) + " rows");
  return solve_integer(smith_normal_form(A), A, b);
}

/// Basis of the integer kernel lattice of A, one basis vector per column. The
/// basis is saturated because it is a block of columns of a unimodular matrix.
template <typename Scalar>
Matrix<Scalar> kernel_basis(const SmithDecomposition<Scalar>& snf) {
  const Eigen::Index n = snf.V.cols();
  return snf.V.rightCols(n - snf.rank);
}

template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& A) {
  return kernel_basis(smith_normal_form(A));
}

}  // namespace hqft
