// SPDX-License-Identifier: Apache-2.0

#include "corrlift/noise.hpp"

#include <cmath>
#include <limits>

namespace corrlift {

Eigen::VectorXcd add_awgn(const Eigen::VectorXcd& values, double snr_db, Rng& rng) {
  if (values.size() == 0) throw ZeroPowerInput("add_awgn: empty input");
  const double power = values.squaredNorm() / static_cast<double>(values.size());
  if (power == 0.0) throw ZeroPowerInput("add_awgn: zero-power input");
  if (std::isinf(snr_db) && snr_db > 0.0) return values;

  const double sigma = std::sqrt(power * std::pow(10.0, -snr_db / 10.0));
  Eigen::VectorXcd noisy(values.size());
  for (Eigen::Index k = 0; k < values.size(); ++k)
    noisy(k) = values(k) + sigma * rng.complex_gaussian();
  return noisy;
}

CorrelationSet noisy_masked_pipeline(const ComplexSignal& x, const MaskSplit& split,
                                     double snr_db, Rng& rng) {
  MaskedMeasurements meas = masked_measure(x, split);
  if (!(std::isinf(snr_db) && snr_db > 0.0)) {
    // One noise variance across all three vectors: corrupt the concatenated
    // record, then split it back.
    const Eigen::Index nf = meas.a_full.values.size();
    const Eigen::Index nl = meas.a_left.values.size();
    const Eigen::Index nr = meas.a_right.values.size();
    Eigen::VectorXcd all(nf + nl + nr);
    all << meas.a_full.values, meas.a_left.values, meas.a_right.values;
    all = add_awgn(all, snr_db, rng);
    meas.a_full.values = all.segment(0, nf);
    meas.a_left.values = all.segment(nf, nl);
    meas.a_right.values = all.segment(nf + nl, nr);
  }
  return infer_cross_correlations(meas);
}

}  // namespace corrlift
