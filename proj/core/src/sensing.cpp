// SPDX-License-Identifier: Apache-2.0

#include "corrlift/sensing.hpp"

#include <set>
#include <tuple>

namespace corrlift {

const char* to_string(MeasurementKind kind) {
  switch (kind) {
    case MeasurementKind::a1: return "a1";
    case MeasurementKind::a2: return "a2";
    case MeasurementKind::a12: return "a12";
    case MeasurementKind::a21: return "a21";
  }
  return "?";
}

Eigen::MatrixXcd StripeConstraint::dense(int n) const {
  // trace(A X) = sum_k X(row0+k, col0+k) requires A's ones at the
  // transposed positions.
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < length; ++k) a(col0 + k, row0 + k) = Complex(1.0, 0.0);
  return a;
}

namespace {

// Stripe of X summed by the constraint labeled (kind, lag) for the
// partition anchored at L: a1 stripes sit in the top-left L x L block,
// a2 in the bottom-right, a12 in the top-right and a21 in the bottom-left.
StripeConstraint make_stripe(MeasurementKind kind, int lag, int l, int n) {
  const int l2 = n - l;
  StripeConstraint c;
  c.kind = kind;
  c.lag = lag;
  c.split = l;
  const int start = std::max(0, lag);
  switch (kind) {
    case MeasurementKind::a1:
      c.row0 = start;
      c.col0 = start - lag;
      c.length = l - std::abs(lag);
      break;
    case MeasurementKind::a2:
      c.row0 = l + start;
      c.col0 = l + start - lag;
      c.length = l2 - std::abs(lag);
      break;
    case MeasurementKind::a12:
      // a12[m] = sum_n x1[n] conj(x2[n-m]) = sum X(n, L+n-m)
      c.row0 = start;
      c.col0 = l + start - lag;
      c.length = std::min(l - 1, l2 - 1 + lag) - start + 1;
      break;
    case MeasurementKind::a21:
      // a21[m] = sum_n x2[n] conj(x1[n-m]) = sum X(L+n, n-m)
      c.row0 = l + start;
      c.col0 = start - lag;
      c.length = std::min(l2 - 1, l - 1 + lag) - start + 1;
      break;
  }
  return c;
}

void append_split_constraints(std::vector<StripeConstraint>& out, int l, int n) {
  const int l2 = n - l;
  for (int m = -(l - 1); m <= l - 1; ++m)
    out.push_back(make_stripe(MeasurementKind::a1, m, l, n));
  for (int m = -(l2 - 1); m <= l2 - 1; ++m)
    out.push_back(make_stripe(MeasurementKind::a2, m, l, n));
  for (int m = -(l - 1); m <= l2 - 1; ++m)
    out.push_back(make_stripe(MeasurementKind::a21, m, l, n));
  for (int m = -(l2 - 1); m <= l - 1; ++m)
    out.push_back(make_stripe(MeasurementKind::a12, m, l, n));
}

}  // namespace

SensingOperator build_sensing_operator(int l1, int l2) {
  if (l1 < 1 || l2 < 1) throw InvalidArgument("build_sensing_operator: lengths must be >= 1");
  SensingOperator op;
  op.n = l1 + l2;
  op.l1 = l1;
  op.l2 = l2;
  append_split_constraints(op.constraints, l1, op.n);
  return op;
}

SensingOperator extend_operator_with_splits(int n, const std::vector<int>& splits) {
  if (splits.empty()) throw InvalidArgument("extend_operator_with_splits: no splits");
  for (int l : splits)
    if (l < 1 || l > n - 2) throw BadSplit("extend_operator_with_splits: L outside 1..N-2");

  SensingOperator op;
  op.n = n;
  op.l1 = splits.front();
  op.l2 = n - splits.front();
  std::set<std::tuple<int, int, int>> seen;
  for (int l : splits) {
    std::vector<StripeConstraint> group;
    append_split_constraints(group, l, n);
    for (const StripeConstraint& c : group)
      if (seen.insert({c.row0, c.col0, c.length}).second) op.constraints.push_back(c);
  }
  return op;
}

Eigen::VectorXcd forward(const SensingOperator& op, const HermitianMatrix& x) {
  if (x.dim() != op.n) throw DimensionMismatch("forward: matrix dimension mismatch");
  const Eigen::MatrixXcd& m = x.mat();
  Eigen::VectorXcd out(op.measurement_count());
  for (int i = 0; i < op.measurement_count(); ++i) {
    const StripeConstraint& c = op.constraints[i];
    Complex acc(0.0, 0.0);
    for (int k = 0; k < c.length; ++k) acc += m(c.row0 + k, c.col0 + k);
    out(i) = acc;
  }
  return out;
}

HermitianMatrix adjoint(const SensingOperator& op, const Eigen::VectorXcd& y) {
  if (y.size() != op.measurement_count())
    throw DimensionMismatch("adjoint: measurement count mismatch");
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(op.n, op.n);
  for (int i = 0; i < op.measurement_count(); ++i) {
    const StripeConstraint& c = op.constraints[i];
    const Complex half = 0.5 * y(i);
    const Complex half_conj = std::conj(half);
    for (int k = 0; k < c.length; ++k) {
      w(c.row0 + k, c.col0 + k) += half;
      w(c.col0 + k, c.row0 + k) += half_conj;
    }
  }
  return HermitianMatrix(w);
}

Eigen::VectorXcd assemble_measurements(const SensingOperator& op,
                                       const std::map<int, CorrelationSet>& sets_by_split) {
  Eigen::VectorXcd b(op.measurement_count());
  for (int i = 0; i < op.measurement_count(); ++i) {
    const StripeConstraint& c = op.constraints[i];
    auto it = sets_by_split.find(c.split);
    if (it == sets_by_split.end())
      throw DimensionMismatch("assemble_measurements: no correlation set for split");
    const CorrelationSet& set = it->second;
    if (set.l1 != c.split || set.l1 + set.l2 != op.n)
      throw DimensionMismatch("assemble_measurements: set does not match split");
    switch (c.kind) {
      case MeasurementKind::a1: b(i) = set.a1.at(c.lag); break;
      case MeasurementKind::a2: b(i) = set.a2.at(c.lag); break;
      case MeasurementKind::a12: b(i) = set.a12.at(c.lag); break;
      case MeasurementKind::a21: b(i) = set.a21.at(c.lag); break;
    }
  }
  return b;
}

Eigen::VectorXcd assemble_measurements(const SensingOperator& op, const CorrelationSet& set) {
  return assemble_measurements(op, std::map<int, CorrelationSet>{{set.l1, set}});
}

}  // namespace corrlift
