// SPDX-License-Identifier: Apache-2.0

#include "corrlift/sylvester.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace corrlift {

SylvesterMatrix build_sylvester(const PolynomialCoeffs& p1, const PolynomialCoeffs& p2) {
  const int d1 = p1.degree();
  const int d2 = p2.degree();
  if (d1 < 1 || d2 < 1) throw DegreeTooSmall("build_sylvester: both degrees must be >= 1");
  SylvesterMatrix s;
  s.d1 = d1;
  s.d2 = d2;
  s.entries = Eigen::MatrixXcd::Zero(d1 + d2, d1 + d2);
  for (int j = 0; j < d1; ++j)
    for (int k = 0; k <= d2; ++k) s.entries(j + k, j) = p2.coeffs(k);
  for (int j = 0; j < d2; ++j)
    for (int k = 0; k <= d1; ++k) s.entries(j + k, d1 + j) = -p1.coeffs(k);
  return s;
}

int sylvester_rank(const SylvesterMatrix& s, double tol) {
  if (tol <= 0.0) throw InvalidArgument("sylvester_rank: tol must be > 0");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.entries);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cutoff = tol * sigma(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++rank;
  return rank;
}

double coprimality_margin(const ComplexSignal& x1, const ComplexSignal& x2) {
  validate_signal(x1);
  validate_signal(x2);
  if (is_zero_signal(x1) || is_zero_signal(x2))
    throw DegenerateSignal("coprimality_margin: zero signal");
  const int d1 = static_cast<int>(x1.size()) - 1;
  const int d2 = static_cast<int>(x2.size()) - 1;
  // Degree-0 polynomials are nonzero constants and never share a root.
  if (d1 == 0 || d2 == 0) return 1.0;
  const SylvesterMatrix s =
      build_sylvester(PolynomialCoeffs::from_signal(x1), PolynomialCoeffs::from_signal(x2));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.entries);
  const auto& sigma = svd.singularValues();
  return sigma(0) == 0.0 ? 0.0 : sigma(sigma.size() - 1) / sigma(0);
}

Eigen::MatrixXcd cross_relation_matrix(const CorrelationVector& a1,
                                       const CorrelationVector& a21, int l1, int l2) {
  if (l1 < 1 || l2 < 1) throw DimensionMismatch("cross_relation_matrix: bad lengths");
  if (a1.size() != 2 * l1 - 1 || a1.lag_offset != -(l1 - 1))
    throw DimensionMismatch("cross_relation_matrix: a1 shape mismatch");
  if (a21.size() != l1 + l2 - 1 || a21.lag_offset != -(l1 - 1))
    throw DimensionMismatch("cross_relation_matrix: a21 shape mismatch");

  // P1 = z^{L1-1} A1(z), degree 2 L1 - 2; P2 = z^{L2-1} A21(z), degree
  // L1 + L2 - 2. Coefficient vectors are the values in increasing lag order.
  const Eigen::VectorXcd& p1 = a1.values;
  const Eigen::VectorXcd& p2 = a21.values;
  const int d1 = 2 * l1 - 2;
  const int d2 = l1 + l2 - 2;

  const int rows = std::max(d1 + d2, l1 + d2);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, l1 + l2);
  for (int j = 0; j < l1; ++j)
    for (int k = 0; k <= d2; ++k) m(j + k, j) = p2(k);
  for (int j = 0; j < l2; ++j)
    for (int k = 0; k <= d1; ++k) m(j + k, l1 + j) = -p1(k);
  return m;
}

std::pair<ComplexSignal, ComplexSignal> recover_sylvester(const CorrelationSet& set,
                                                          const SylvesterOptions& options) {
  validate_set(set);
  const int l1 = set.l1;
  const int l2 = set.l2;
  const int n = l1 + l2;

  Eigen::MatrixXcd system = cross_relation_matrix(set.a1, set.a21, l1, l2);
  if (options.stack_symmetric) {
    // The (a2, a12) system solves for (x2; x1); swap its column blocks.
    const Eigen::MatrixXcd mirrored = cross_relation_matrix(set.a2, set.a12, l2, l1);
    Eigen::MatrixXcd reordered(mirrored.rows(), n);
    reordered << mirrored.rightCols(l1), mirrored.leftCols(l2);
    Eigen::MatrixXcd stacked(system.rows() + reordered.rows(), n);
    stacked << system, reordered;
    system = std::move(stacked);
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeFullV);
  Eigen::VectorXd sigma = Eigen::VectorXd::Zero(n);
  sigma.head(svd.singularValues().size()) = svd.singularValues();

  if (sigma(0) == 0.0 || sigma(n - 2) - sigma(n - 1) <= options.gap_tol * sigma(0))
    throw RankAmbiguity("recover_sylvester: smallest singular values not separated");

  const Eigen::VectorXcd v = svd.matrixV().col(n - 1);
  const double energy = std::max(std::real(set.a1.at(0) + set.a2.at(0)), 0.0);
  const ComplexSignal xhat = std::sqrt(energy) * v;
  return {xhat.head(l1), xhat.tail(l2)};
}

}  // namespace corrlift
