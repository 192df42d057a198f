// SPDX-License-Identifier: Apache-2.0

#include "corrlift/metrics.hpp"

#include <cmath>

namespace corrlift {

double align_global_phase(const ComplexSignal& reference, const ComplexSignal& estimate) {
  validate_signal(reference);
  validate_signal(estimate);
  if (reference.size() != estimate.size())
    throw DimensionMismatch("align_global_phase: length mismatch");
  if (is_zero_signal(estimate)) throw ZeroEstimate("align_global_phase: zero estimate");
  // <estimate, reference> = sum conj(estimate) * reference
  const Complex inner = estimate.dot(reference);
  return std::arg(inner);
}

double nmse(const ComplexSignal& reference, const ComplexSignal& estimate) {
  validate_signal(reference);
  validate_signal(estimate);
  if (reference.size() != estimate.size()) throw DimensionMismatch("nmse: length mismatch");
  const double ref2 = reference.squaredNorm();
  if (ref2 == 0.0) throw ZeroReference("nmse: zero reference");
  // ||r - e^{i phi*} e||^2 = ||r||^2 + ||e||^2 - 2 |<e, r>| at the optimum.
  const double est2 = estimate.squaredNorm();
  const double cross = std::abs(estimate.dot(reference));
  const double err = std::max(ref2 + est2 - 2.0 * cross, 0.0);
  return err / ref2;
}

}  // namespace corrlift
