// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_SIGNAL2D_HPP
#define CORRLIFT_SIGNAL2D_HPP

#include "corrlift/masking.hpp"

namespace corrlift {

/// Two-dimensional complex signal, entry (n1, n2) = row n1, column n2.
struct Signal2D {
  Eigen::MatrixXcd entries;

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
};

/// 2D correlation values over a rectangular lag grid; out-of-range lags
/// read as zero.
struct Correlation2D {
  Eigen::MatrixXcd values;
  int row_lag_offset = 0;
  int col_lag_offset = 0;

  bool has_lag(int m1, int m2) const {
    return m1 >= row_lag_offset && m1 < row_lag_offset + values.rows() &&
           m2 >= col_lag_offset && m2 < col_lag_offset + values.cols();
  }
  Complex at(int m1, int m2) const {
    return has_lag(m1, m2) ? values(m1 - row_lag_offset, m2 - col_lag_offset)
                           : Complex(0.0, 0.0);
  }
};

enum class VecOrder { column_major, row_major };

/// Stacks the signal into a vector; column-major maps (n1, n2) to
/// n2 * rows + n1.
ComplexSignal vec_2d(const Signal2D& s, VecOrder order = VecOrder::column_major);

/// a[m1, m2] = sum s[n1, n2] conj(s[n1 - m1, n2 - m2]) by direct summation.
Correlation2D autocorrelate_2d(const Signal2D& s);

/// 1D autocorrelation of the column-major vectorization, computed from the
/// 2D autocorrelation alone:
///   a1d[m] = a2d[m mod R, floor(m/R)] + a2d[m mod R - R, floor(m/R) + 1]
/// for m >= 0, negative lags by conjugate symmetry. R = rows, C = cols of
/// the underlying signal. Throws DimensionMismatch if a2d does not have the
/// (2R-1) x (2C-1) lag grid of an R x C signal.
CorrelationVector autocorr_1d_from_2d(const Correlation2D& a2d, int rows, int cols);

/// Masked measurement of a 2D signal split at column L: autocorrelations of
/// the full signal, its first L columns, and the remaining columns, each
/// reduced to the 1D autocorrelation of its vectorization. The returned
/// split is (N = rows*cols, L_vec = rows*L). Throws BadSplit unless
/// 1 <= L <= cols-2.
MaskedMeasurements masked_measure_2d(const Signal2D& s, int col_split);

}  // namespace corrlift

#endif  // CORRLIFT_SIGNAL2D_HPP
