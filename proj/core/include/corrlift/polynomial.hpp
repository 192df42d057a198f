// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_POLYNOMIAL_HPP
#define CORRLIFT_POLYNOMIAL_HPP

#include "corrlift/correlation.hpp"
#include "corrlift/signal.hpp"

namespace corrlift {

/// Dense univariate polynomial, coefficients ordered from the highest power
/// down to the constant term: p(z) = c[0] z^d + ... + c[d].
///
/// No degree truncation is ever applied: numerically tiny leading
/// coefficients are kept as-is, so the degree is always len(coeffs) - 1.
struct PolynomialCoeffs {
  Eigen::VectorXcd coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// The polynomial z^{L-1} X(z) of a length-L signal; its coefficient
  /// vector in highest-to-constant order is the signal itself.
  static PolynomialCoeffs from_signal(const ComplexSignal& x);

  /// The polynomial z^{-lag_min} A(z) of a correlation vector: the shift
  /// makes every power nonnegative, and the coefficients in
  /// highest-to-constant order are the values in increasing lag order.
  static PolynomialCoeffs from_correlation(const CorrelationVector& a);
};

/// Coefficients of the product p*q (convolution).
PolynomialCoeffs multiply(const PolynomialCoeffs& p, const PolynomialCoeffs& q);

/// Monic polynomial with the given roots.
PolynomialCoeffs from_roots(const Eigen::VectorXcd& roots);

}  // namespace corrlift

#endif  // CORRLIFT_POLYNOMIAL_HPP
