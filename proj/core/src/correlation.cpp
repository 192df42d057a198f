// SPDX-License-Identifier: Apache-2.0

#include "corrlift/correlation.hpp"

namespace corrlift {

CorrelationVector autocorrelate(const ComplexSignal& x) {
  validate_signal(x);
  const int l = static_cast<int>(x.size());
  CorrelationVector a;
  a.lag_offset = -(l - 1);
  a.values = Eigen::VectorXcd::Zero(2 * l - 1);
  for (int m = -(l - 1); m <= l - 1; ++m) {
    Complex acc(0.0, 0.0);
    const int n_lo = std::max(0, m);
    const int n_hi = std::min(l - 1, l - 1 + m);
    for (int n = n_lo; n <= n_hi; ++n) acc += x(n) * std::conj(x(n - m));
    a.ref(m) = acc;
  }
  return a;
}

CorrelationVector cross_correlate(const ComplexSignal& x1, const ComplexSignal& x2) {
  validate_signal(x1);
  validate_signal(x2);
  const int l1 = static_cast<int>(x1.size());
  const int l2 = static_cast<int>(x2.size());
  CorrelationVector a;
  a.lag_offset = -(l2 - 1);
  a.values = Eigen::VectorXcd::Zero(l1 + l2 - 1);
  for (int m = -(l2 - 1); m <= l1 - 1; ++m) {
    Complex acc(0.0, 0.0);
    const int n_lo = std::max(0, m);
    const int n_hi = std::min(l1 - 1, l2 - 1 + m);
    for (int n = n_lo; n <= n_hi; ++n) acc += x1(n) * std::conj(x2(n - m));
    a.ref(m) = acc;
  }
  return a;
}

CorrelationSet full_correlation_set(const ComplexSignal& x1, const ComplexSignal& x2) {
  CorrelationSet set;
  set.a1 = autocorrelate(x1);
  set.a2 = autocorrelate(x2);
  set.a12 = cross_correlate(x1, x2);
  set.a21 = cross_correlate(x2, x1);
  set.l1 = static_cast<int>(x1.size());
  set.l2 = static_cast<int>(x2.size());
  return set;
}

void validate_set(const CorrelationSet& set) {
  const int l1 = set.l1;
  const int l2 = set.l2;
  if (l1 < 1 || l2 < 1) throw DimensionMismatch("correlation set: invalid lengths");
  auto check = [](const CorrelationVector& v, int offset, int size, const char* name) {
    if (v.lag_offset != offset || v.size() != size)
      throw DimensionMismatch(std::string("correlation set: bad shape for ") + name);
  };
  check(set.a1, -(l1 - 1), 2 * l1 - 1, "a1");
  check(set.a2, -(l2 - 1), 2 * l2 - 1, "a2");
  check(set.a12, -(l2 - 1), l1 + l2 - 1, "a12");
  check(set.a21, -(l1 - 1), l1 + l2 - 1, "a21");
}

}  // namespace corrlift
