// SPDX-License-Identifier: Apache-2.0

#include "corrlift/polynomial.hpp"

namespace corrlift {

PolynomialCoeffs PolynomialCoeffs::from_signal(const ComplexSignal& x) {
  validate_signal(x);
  return PolynomialCoeffs{x};
}

PolynomialCoeffs PolynomialCoeffs::from_correlation(const CorrelationVector& a) {
  if (a.size() < 1) throw InvalidArgument("from_correlation: empty vector");
  return PolynomialCoeffs{a.values};
}

PolynomialCoeffs multiply(const PolynomialCoeffs& p, const PolynomialCoeffs& q) {
  const int np = static_cast<int>(p.coeffs.size());
  const int nq = static_cast<int>(q.coeffs.size());
  if (np == 0 || nq == 0) throw InvalidArgument("multiply: empty polynomial");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(np + nq - 1);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) out(i + j) += p.coeffs(i) * q.coeffs(j);
  return PolynomialCoeffs{out};
}

PolynomialCoeffs from_roots(const Eigen::VectorXcd& roots) {
  PolynomialCoeffs p{Eigen::VectorXcd::Ones(1)};
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    Eigen::VectorXcd factor(2);
    factor << Complex(1.0, 0.0), -roots(k);
    p = multiply(p, PolynomialCoeffs{factor});
  }
  return p;
}

}  // namespace corrlift
