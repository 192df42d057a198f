// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_METRICS_HPP
#define CORRLIFT_METRICS_HPP

#include "corrlift/signal.hpp"

namespace corrlift {

/// Phase angle phi minimizing ||reference - e^{i phi} estimate||_2.
/// Closed form: phi = arg(<estimate, reference>) with <u,v> = sum conj(u) v.
/// Throws ZeroEstimate when the estimate is identically zero.
double align_global_phase(const ComplexSignal& reference, const ComplexSignal& estimate);

/// min_phi ||reference - e^{i phi} estimate||^2 / ||reference||^2.
/// Invariant under a global phase on either argument; a zero estimate gives
/// exactly 1. Throws ZeroReference when the reference is identically zero.
double nmse(const ComplexSignal& reference, const ComplexSignal& estimate);

}  // namespace corrlift

#endif  // CORRLIFT_METRICS_HPP
