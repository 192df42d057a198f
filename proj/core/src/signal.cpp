// SPDX-License-Identifier: Apache-2.0

#include "corrlift/signal.hpp"

#include <cmath>

namespace corrlift {

void validate_signal(const ComplexSignal& x) {
  if (x.size() < 1) throw InvalidArgument("signal must have length >= 1");
  if (!x.allFinite()) throw InvalidArgument("signal entries must be finite");
}

bool is_zero_signal(const ComplexSignal& x) {
  return x.size() == 0 || x.isZero(0.0);
}

ComplexSignal sample_signal(int length, double radius, double min_first_magnitude,
                            Rng& rng, long max_attempts) {
  if (length < 1) throw InvalidArgument("sample_signal: length must be >= 1");
  if (radius <= 0.0) throw InvalidArgument("sample_signal: radius must be > 0");
  if (min_first_magnitude < 0.0 || min_first_magnitude >= radius)
    throw InvalidArgument("sample_signal: need 0 <= min_first_magnitude < radius");

  for (long attempt = 0; attempt < max_attempts; ++attempt) {
    ComplexSignal x(length);
    for (int n = 0; n < length; ++n) x(n) = rng.complex_gaussian();
    const double nrm = x.norm();
    if (nrm == 0.0) continue;
    x *= radius / nrm;
    if (std::abs(x(0)) >= min_first_magnitude) return x;
  }
  throw RejectionBudgetExceeded("sample_signal: rejection budget exceeded");
}

}  // namespace corrlift
