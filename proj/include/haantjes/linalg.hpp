#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "haantjes/rational.hpp"

namespace haantjes {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;

/// Reduced row echelon form together with its pivot columns.
template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> rref;
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Gauss-Jordan elimination over an exact field. The pivot of each step is
/// the first nonzero entry scanning columns left to right and rows top to
/// bottom; pivot rows are scaled to a leading 1. The output is therefore a
/// deterministic function of the input.
template <typename Derived>
Echelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out{m, {}};
  auto& a = out.rref;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(m).rank();
}

/// Columns form a basis of the right null space {v : m v = 0}; one basis
/// vector per free column, with a 1 in that column.
template <typename Derived>
MatrixX<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_reduce(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(cols, cols - ech.rank());
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (Eigen::Index r = 0; r < ech.rank(); ++r) basis(ech.pivots[r], k) = -ech.rref(r, free);
    ++k;
  }
  return basis;
}

/// Nonzero rows of the RREF: a canonical basis of the row space.
template <typename Derived>
MatrixX<typename Derived::Scalar> rowspace_basis(const Eigen::MatrixBase<Derived>& m) {
  const auto ech = row_reduce(m);
  return ech.rref.topRows(ech.rank());
}

template <typename D1, typename D2>
MatrixX<typename D1::Scalar> stack_rows(const Eigen::MatrixBase<D1>& top,
                                        const Eigen::MatrixBase<D2>& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("column count mismatch");
  MatrixX<typename D1::Scalar> out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

/// True iff every row of `sub` lies in the row space of `m`.
template <typename D1, typename D2>
bool rowspace_contains(const Eigen::MatrixBase<D1>& m, const Eigen::MatrixBase<D2>& sub) {
  if (m.cols() != sub.cols()) throw std::invalid_argument("column count mismatch");
  return rank(stack_rows(m, sub)) == rank(m);
}

template <typename D1, typename D2>
bool rowspace_equal(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("column count mismatch");
  const auto ba = rowspace_basis(a);
  const auto bb = rowspace_basis(b);
  return ba.rows() == bb.rows() && ba == bb;
}

/// Exact inverse; throws std::domain_error for singular input.
template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  const auto ech = row_reduce(aug);
  if (ech.rank() < n || ech.pivots[n - 1] >= n) throw std::domain_error("matrix is singular");
  return ech.rref.rightCols(n);
}

}  // namespace haantjes
