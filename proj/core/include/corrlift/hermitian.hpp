// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_HERMITIAN_HPP
#define CORRLIFT_HERMITIAN_HPP

#include <Eigen/Core>

#include "corrlift/errors.hpp"

namespace corrlift {

/// N x N Hermitian matrix; symmetrized on construction so that
/// entries(i,j) == conj(entries(j,i)) always holds exactly.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  explicit HermitianMatrix(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("HermitianMatrix: not square");
    mat_ = 0.5 * (m + m.adjoint());
  }

  static HermitianMatrix Zero(int n) {
    HermitianMatrix h;
    h.mat_ = Eigen::MatrixXcd::Zero(n, n);
    return h;
  }

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& mat() const { return mat_; }

 private:
  Eigen::MatrixXcd mat_;
};

}  // namespace corrlift

#endif  // CORRLIFT_HERMITIAN_HPP
