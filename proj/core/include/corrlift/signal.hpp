// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_SIGNAL_HPP
#define CORRLIFT_SIGNAL_HPP

#include <Eigen/Core>
#include <complex>

#include "corrlift/errors.hpp"
#include "corrlift/random.hpp"

namespace corrlift {

using Complex = std::complex<double>;

/// Finite-length complex signal x[0..L-1]; index values outside this range
/// are treated as zero by every correlation operation.
using ComplexSignal = Eigen::VectorXcd;

/// Throws InvalidArgument unless the signal is nonempty with finite entries.
void validate_signal(const ComplexSignal& x);

/// True iff every entry is zero.
bool is_zero_signal(const ComplexSignal& x);

/// Draws a signal uniformly from the complex sphere of the given radius,
/// resampling the whole vector until |x[0]| >= min_first_magnitude.
///
/// Deterministic given the rng state. Throws RejectionBudgetExceeded once
/// max_attempts whole-vector draws have been rejected.
ComplexSignal sample_signal(int length, double radius, double min_first_magnitude,
                            Rng& rng, long max_attempts = 1000000);

}  // namespace corrlift

#endif  // CORRLIFT_SIGNAL_HPP
