// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_MASKING_HPP
#define CORRLIFT_MASKING_HPP

#include "corrlift/correlation.hpp"

namespace corrlift {

/// Partition of a length-N signal into x1 = x[0..L-1], x2 = x[L..N-1],
/// with 1 <= L <= N-2.
struct MaskSplit {
  int n = 0;
  int l = 0;

  void validate() const;
};

/// The three autocorrelations measured through the masks: the full signal,
/// the left part x[0..L-1], and the right part x[L..N-1].
struct MaskedMeasurements {
  CorrelationVector a_full;
  CorrelationVector a_left;
  CorrelationVector a_right;
  MaskSplit split;
};

/// Measures the three masked autocorrelations. Throws BadSplit when L is
/// outside 1..N-2 or the split length disagrees with the signal.
MaskedMeasurements masked_measure(const ComplexSignal& x, const MaskSplit& split);

/// Recovers the cross-correlations from the masked autocorrelations.
///
/// The residual c[m] = a_full[m] - a_left[m] - a_right[m] splits by sign of
/// the z-power: a21[k] = c[k + L] and a12[k] = c[k - L]. Lag 0 of c carries
/// no signal and is discarded (it is numerically zero in the noiseless case).
CorrelationSet infer_cross_correlations(const MaskedMeasurements& meas);

/// Number of phaseless Fourier measurements behind the three masks:
/// 2N + 2L + 2(N-L) = 4N.
long phaseless_count(const MaskSplit& split);

}  // namespace corrlift

#endif  // CORRLIFT_MASKING_HPP
