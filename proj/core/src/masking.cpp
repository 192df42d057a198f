// SPDX-License-Identifier: Apache-2.0

#include "corrlift/masking.hpp"

namespace corrlift {

void MaskSplit::validate() const {
  if (n < 3 || l < 1 || l > n - 2)
    throw BadSplit("mask split: need 1 <= L <= N-2");
}

MaskedMeasurements masked_measure(const ComplexSignal& x, const MaskSplit& split) {
  split.validate();
  if (static_cast<int>(x.size()) != split.n)
    throw BadSplit("masked_measure: signal length does not match split");
  MaskedMeasurements meas;
  meas.split = split;
  meas.a_full = autocorrelate(x);
  meas.a_left = autocorrelate(x.head(split.l));
  meas.a_right = autocorrelate(x.tail(split.n - split.l));
  return meas;
}

CorrelationSet infer_cross_correlations(const MaskedMeasurements& meas) {
  const int n = meas.split.n;
  const int l = meas.split.l;
  const int l2 = n - l;
  if (meas.a_full.size() != 2 * n - 1 || meas.a_left.size() != 2 * l - 1 ||
      meas.a_right.size() != 2 * l2 - 1)
    throw DimensionMismatch("infer_cross_correlations: inconsistent measurement sizes");

  // c[m] = a_full[m] - a_left[m] - a_right[m], missing lags read as zero.
  auto residual = [&](int m) {
    return meas.a_full.at(m) - meas.a_left.at(m) - meas.a_right.at(m);
  };

  CorrelationSet set;
  set.l1 = l;
  set.l2 = l2;
  set.a1 = meas.a_left;
  set.a2 = meas.a_right;

  // Positive powers of z in the residual polynomial are c at negative lags
  // and carry a12; negative powers are c at positive lags and carry a21.
  set.a12.lag_offset = -(l2 - 1);
  set.a12.values = Eigen::VectorXcd::Zero(n - 1);
  for (int k = -(l2 - 1); k <= l - 1; ++k) set.a12.ref(k) = residual(k - l);

  set.a21.lag_offset = -(l - 1);
  set.a21.values = Eigen::VectorXcd::Zero(n - 1);
  for (int k = -(l - 1); k <= l2 - 1; ++k) set.a21.ref(k) = residual(k + l);

  return set;
}

long phaseless_count(const MaskSplit& split) {
  split.validate();
  return 4L * split.n;
}

}  // namespace corrlift
