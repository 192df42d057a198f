// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_CORRELATION_HPP
#define CORRLIFT_CORRELATION_HPP

#include <Eigen/Core>

#include "corrlift/signal.hpp"

namespace corrlift {

/// Lag-indexed complex vector. values(k) holds the correlation at lag
/// lag_offset + k; the explicit offset removes any implicit-centering
/// ambiguity between modules.
struct CorrelationVector {
  Eigen::VectorXcd values;
  int lag_offset = 0;

  int size() const { return static_cast<int>(values.size()); }
  int lag_min() const { return lag_offset; }
  int lag_max() const { return lag_offset + size() - 1; }
  bool has_lag(int m) const { return m >= lag_min() && m <= lag_max(); }

  /// Value at lag m; zero outside the stored range.
  Complex at(int m) const {
    return has_lag(m) ? values(m - lag_offset) : Complex(0.0, 0.0);
  }
  Complex& ref(int m) { return values(m - lag_offset); }
};

/// The four measurement vectors of a signal pair (x1, x2).
struct CorrelationSet {
  CorrelationVector a1;   // autocorrelation of x1, lags -(L1-1)..L1-1
  CorrelationVector a2;   // autocorrelation of x2, lags -(L2-1)..L2-1
  CorrelationVector a12;  // cross-correlation, lags -(L2-1)..L1-1
  CorrelationVector a21;  // cross-correlation, lags -(L1-1)..L2-1
  int l1 = 0;
  int l2 = 0;
};

/// a[m] = sum_n x[n] conj(x[n-m]) over lags -(L-1)..L-1.
CorrelationVector autocorrelate(const ComplexSignal& x);

/// a12[m] = sum_n x1[n] conj(x2[n-m]) over lags -(L2-1)..L1-1.
CorrelationVector cross_correlate(const ComplexSignal& x1, const ComplexSignal& x2);

/// Bundles {a1, a2, a12, a21}; a21[m] = conj(a12[-m]) holds by construction.
CorrelationSet full_correlation_set(const ComplexSignal& x1, const ComplexSignal& x2);

/// Throws DimensionMismatch unless the four vectors have the lengths and
/// offsets implied by (l1, l2).
void validate_set(const CorrelationSet& set);

}  // namespace corrlift

#endif  // CORRLIFT_CORRELATION_HPP
