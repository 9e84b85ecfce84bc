#pragma once

// Checked dense kernels the forward and backward rules are assembled from.
// Inputs accept arbitrary Eigen expressions; results are materialized.

#include <Eigen/Core>

#include "twostep/types.hpp"

namespace twostep {

namespace detail {

template <class D>
void require_column(const char* op, const Eigen::MatrixBase<D>& v) {
  if (v.cols() != 1)
    throw ShapeError(std::string(op) + ": expected a column vector, got " + shape_str(v));
}

}  // namespace detail

/// a * b with an explicit conformability check.
template <class DA, class DB>
DenseMatrix<typename DA::Scalar> matmul(const Eigen::MatrixBase<DA>& a,
                                        const Eigen::MatrixBase<DB>& b) {
  if (a.cols() != b.rows())
    throw ShapeError("matmul: cannot multiply " + detail::shape_str(a) + " by " +
                     detail::shape_str(b));
  return a * b;
}

/// w * x for a column vector x.
template <class DW, class DX>
DenseVector<typename DW::Scalar> matvec(const Eigen::MatrixBase<DW>& w,
                                        const Eigen::MatrixBase<DX>& x) {
  detail::require_column("matvec", x);
  if (w.cols() != x.rows())
    throw ShapeError("matvec: cannot multiply " + detail::shape_str(w) + " by " +
                     detail::shape_str(x));
  return w * x;
}

template <class D>
DenseMatrix<typename D::Scalar> transpose(const Eigen::MatrixBase<D>& a) {
  return a.transpose();
}

/// Element-wise product of two equally sized column vectors.
template <class DA, class DB>
DenseVector<typename DA::Scalar> hadamard(const Eigen::MatrixBase<DA>& a,
                                          const Eigen::MatrixBase<DB>& b) {
  detail::require_column("hadamard", a);
  detail::require_column("hadamard", b);
  if (a.rows() != b.rows())
    throw ShapeError("hadamard: size mismatch, " + detail::shape_str(a) + " vs " +
                     detail::shape_str(b));
  return a.cwiseProduct(b);
}

/// u v^T, the rank-one product of two column vectors.
template <class DU, class DV>
DenseMatrix<typename DU::Scalar> outer(const Eigen::MatrixBase<DU>& u,
                                       const Eigen::MatrixBase<DV>& v) {
  detail::require_column("outer", u);
  detail::require_column("outer", v);
  return u * v.transpose();
}

/// Copy of w without its last column (the bias column of an augmented layer).
template <class D>
DenseMatrix<typename D::Scalar> drop_last_column(const Eigen::MatrixBase<D>& w) {
  if (w.cols() < 2)
    throw ShapeError("drop_last_column: need at least 2 columns, got " + detail::shape_str(w));
  return w.leftCols(w.cols() - 1);
}

/// alpha * a + b for same-shaped matrices.
template <class DA, class DB>
DenseMatrix<typename DA::Scalar> axpy(typename DA::Scalar alpha, const Eigen::MatrixBase<DA>& a,
                                      const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("axpy: shape mismatch, " + detail::shape_str(a) + " vs " +
                     detail::shape_str(b));
  return alpha * a.derived() + b.derived();
}

}  // namespace twostep
