// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_SENSING_HPP
#define CORRLIFT_SENSING_HPP

#include <map>
#include <vector>

#include "corrlift/correlation.hpp"
#include "corrlift/hermitian.hpp"

namespace corrlift {

enum class MeasurementKind { a1, a2, a12, a21 };

const char* to_string(MeasurementKind kind);

/// One affine constraint trace(A_m X) = b_m of the lifted program. A_m is a
/// 0/1 matrix supported on one diagonal stripe; equivalently the constraint
/// reads sum_k X(row0 + k, col0 + k) = b_m, which is how forward() and
/// adjoint() evaluate it. The label (kind, lag, split) names the correlation
/// value the stripe measures for X = x x*.
struct StripeConstraint {
  MeasurementKind kind = MeasurementKind::a1;
  int lag = 0;
  int split = 0;  // L1 of the partition the stripe is anchored at
  int row0 = 0;
  int col0 = 0;
  int length = 0;

  /// Dense A_m with trace(A_m X) equal to the stripe sum.
  Eigen::MatrixXcd dense(int n) const;
};

/// Ordered constraint list of the lifted program over an N x N Hermitian
/// variable. For a single split the order is: a1 lags ascending, a2 lags
/// ascending, then the top-right-block stripes (a21) and the
/// bottom-left-block stripes (a12), M = 4N-4 in total. Conjugate-redundant
/// lags are kept.
struct SensingOperator {
  int n = 0;
  int l1 = 0;
  int l2 = 0;
  std::vector<StripeConstraint> constraints;

  int measurement_count() const { return static_cast<int>(constraints.size()); }
};

/// Constraints of the lifted program for the partition (L1, L2). For every
/// signal pair, trace(A_m x x*) equals the labeled entry of
/// full_correlation_set(x1, x2).
SensingOperator build_sensing_operator(int l1, int l2);

/// Union of the constraints of several splits of the same length-N signal,
/// stripes deduplicated by support. Throws BadSplit for any L outside
/// 1..N-2.
SensingOperator extend_operator_with_splits(int n, const std::vector<int>& splits);

/// (trace(A_m X))_m, evaluated as stripe sums.
Eigen::VectorXcd forward(const SensingOperator& op, const HermitianMatrix& x);

/// Adjoint of forward on the real vector space of Hermitian matrices:
/// Re<forward(X), y> = <X, adjoint(y)>_F for all Hermitian X. Returned as
/// the Hermitian symmetrization of sum_m conj(y_m) A_m.
HermitianMatrix adjoint(const SensingOperator& op, const Eigen::VectorXcd& y);

/// Measurement vector in constraint order, values taken from the set of the
/// matching split. Throws DimensionMismatch when a split has no set.
Eigen::VectorXcd assemble_measurements(const SensingOperator& op,
                                       const std::map<int, CorrelationSet>& sets_by_split);

/// Single-split convenience overload.
Eigen::VectorXcd assemble_measurements(const SensingOperator& op, const CorrelationSet& set);

}  // namespace corrlift

#endif  // CORRLIFT_SENSING_HPP
