// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_NOISE_HPP
#define CORRLIFT_NOISE_HPP

#include "corrlift/masking.hpp"

namespace corrlift {

/// Adds i.i.d. circular complex Gaussian noise with per-entry variance
/// sigma^2 = mean(|values|^2) * 10^(-snr_db/10). An infinite SNR returns the
/// input unchanged. Throws ZeroPowerInput on an empty or all-zero vector.
Eigen::VectorXcd add_awgn(const Eigen::VectorXcd& values, double snr_db, Rng& rng);

/// Noisy three-mask measurement pipeline: corrupts the three autocorrelation
/// vectors and infers the cross-correlations from the noisy residual.
///
/// One noise variance, set by the pooled mean power of all three vectors, is
/// applied to every stored scalar; with a common per-entry variance the
/// inferred cross-correlation entries carry up to three times the variance
/// of a directly measured autocorrelation entry.
CorrelationSet noisy_masked_pipeline(const ComplexSignal& x, const MaskSplit& split,
                                     double snr_db, Rng& rng);

}  // namespace corrlift

#endif  // CORRLIFT_NOISE_HPP
