// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_CHANNEL_HPP
#define CORRLIFT_CHANNEL_HPP

#include <utility>

#include "corrlift/correlation.hpp"

namespace corrlift {

/// Two FIR channels driven by a common unit-variance white source.
struct ChannelPair {
  ComplexSignal h1;
  ComplexSignal h2;
};

/// Splits a channel into its even- and odd-indexed taps, the two virtual
/// channels seen when sampling at twice the transmission rate.
/// Throws TooShort for fewer than two taps.
std::pair<ComplexSignal, ComplexSignal> split_baud_rate(const ComplexSignal& h);

/// Interleaves the even/odd tap vectors back into one channel; inverse of
/// split_baud_rate.
ComplexSignal merge_baud_rate(const ComplexSignal& h_even, const ComplexSignal& h_odd);

/// Exact spectral-density measurements of the pair: the auto- and
/// cross-correlation set of (h1, h2). Throws DegenerateSignal if either
/// channel is identically zero.
CorrelationSet channel_correlations(const ChannelPair& pair);

}  // namespace corrlift

#endif  // CORRLIFT_CHANNEL_HPP
