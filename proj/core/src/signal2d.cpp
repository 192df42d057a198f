// SPDX-License-Identifier: Apache-2.0

#include "corrlift/signal2d.hpp"

namespace corrlift {

ComplexSignal vec_2d(const Signal2D& s, VecOrder order) {
  if (s.rows() < 1 || s.cols() < 1) throw InvalidArgument("vec_2d: empty signal");
  const int r = s.rows();
  const int c = s.cols();
  ComplexSignal v(r * c);
  if (order == VecOrder::column_major) {
    for (int n2 = 0; n2 < c; ++n2)
      for (int n1 = 0; n1 < r; ++n1) v(n2 * r + n1) = s.entries(n1, n2);
  } else {
    for (int n1 = 0; n1 < r; ++n1)
      for (int n2 = 0; n2 < c; ++n2) v(n1 * c + n2) = s.entries(n1, n2);
  }
  return v;
}

Correlation2D autocorrelate_2d(const Signal2D& s) {
  if (s.rows() < 1 || s.cols() < 1) throw InvalidArgument("autocorrelate_2d: empty signal");
  if (!s.entries.allFinite()) throw InvalidArgument("autocorrelate_2d: non-finite entries");
  const int r = s.rows();
  const int c = s.cols();
  Correlation2D a;
  a.row_lag_offset = -(r - 1);
  a.col_lag_offset = -(c - 1);
  a.values = Eigen::MatrixXcd::Zero(2 * r - 1, 2 * c - 1);
  for (int m1 = -(r - 1); m1 <= r - 1; ++m1) {
    for (int m2 = -(c - 1); m2 <= c - 1; ++m2) {
      Complex acc(0.0, 0.0);
      const int n1_lo = std::max(0, m1), n1_hi = std::min(r - 1, r - 1 + m1);
      const int n2_lo = std::max(0, m2), n2_hi = std::min(c - 1, c - 1 + m2);
      for (int n1 = n1_lo; n1 <= n1_hi; ++n1)
        for (int n2 = n2_lo; n2 <= n2_hi; ++n2)
          acc += s.entries(n1, n2) * std::conj(s.entries(n1 - m1, n2 - m2));
      a.values(m1 - a.row_lag_offset, m2 - a.col_lag_offset) = acc;
    }
  }
  return a;
}

CorrelationVector autocorr_1d_from_2d(const Correlation2D& a2d, int rows, int cols) {
  if (rows < 1 || cols < 1) throw DimensionMismatch("autocorr_1d_from_2d: bad dimensions");
  if (a2d.values.rows() != 2 * rows - 1 || a2d.values.cols() != 2 * cols - 1 ||
      a2d.row_lag_offset != -(rows - 1) || a2d.col_lag_offset != -(cols - 1))
    throw DimensionMismatch("autocorr_1d_from_2d: lag grid does not match dimensions");

  const int len = rows * cols;
  CorrelationVector a;
  a.lag_offset = -(len - 1);
  a.values = Eigen::VectorXcd::Zero(2 * len - 1);
  for (int m = 0; m <= len - 1; ++m) {
    const int m1 = m % rows;
    const int m2 = m / rows;
    const Complex v = a2d.at(m1, m2) + a2d.at(m1 - rows, m2 + 1);
    a.ref(m) = v;
    a.ref(-m) = std::conj(v);
  }
  return a;
}

MaskedMeasurements masked_measure_2d(const Signal2D& s, int col_split) {
  if (s.rows() < 1 || s.cols() < 3 || col_split < 1 || col_split > s.cols() - 2)
    throw BadSplit("masked_measure_2d: need 1 <= L <= cols-2");
  const int r = s.rows();
  const int c = s.cols();

  Signal2D left{s.entries.leftCols(col_split)};
  Signal2D right{s.entries.rightCols(c - col_split)};

  MaskedMeasurements meas;
  meas.split = MaskSplit{r * c, r * col_split};
  meas.a_full = autocorr_1d_from_2d(autocorrelate_2d(s), r, c);
  meas.a_left = autocorr_1d_from_2d(autocorrelate_2d(left), r, col_split);
  meas.a_right = autocorr_1d_from_2d(autocorrelate_2d(right), r, c - col_split);
  return meas;
}

}  // namespace corrlift
