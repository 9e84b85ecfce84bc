#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace twostep {

/// Dense storage templated on the scalar. The engine instantiates everything
/// with double; the aliases keep the kernels generic.
template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = DenseMatrix<double>;
using ColVec = DenseVector<double>;
using Index = Eigen::Index;

/// Thrown on any dimension mismatch. Shapes never broadcast silently.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown on unreadable or invalid model/dataset files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string shape_str(Index rows, Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

template <class D>
std::string shape_str(const Eigen::MatrixBase<D>& m) {
  return shape_str(m.rows(), m.cols());
}

}  // namespace detail

}  // namespace twostep
