// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_SYLVESTER_HPP
#define CORRLIFT_SYLVESTER_HPP

#include <utility>

#include "corrlift/polynomial.hpp"

namespace corrlift {

/// Sylvester matrix of two polynomials of degrees d1 and d2: the
/// (d1+d2) x (d1+d2) matrix whose first d1 columns are down-shifted copies
/// of p2's coefficients and whose remaining d2 columns are down-shifted
/// copies of -p1's coefficients. Its rank is d1 + d2 - deg gcd(p1, p2), and
/// (v1; v2) lies in its null space iff p2 v1 - p1 v2 = 0 with deg v1 < d1,
/// deg v2 < d2.
struct SylvesterMatrix {
  Eigen::MatrixXcd entries;
  int d1 = 0;
  int d2 = 0;
};

/// Builds the Sylvester matrix. Throws DegreeTooSmall unless both degrees
/// are at least 1.
SylvesterMatrix build_sylvester(const PolynomialCoeffs& p1, const PolynomialCoeffs& p2);

/// Numerical rank: number of singular values above tol * sigma_max.
int sylvester_rank(const SylvesterMatrix& s, double tol);

/// Scale-invariant co-primality margin of the polynomials z^{L1-1} X1(z)
/// and z^{L2-1} X2(z): sigma_min / sigma_max of their Sylvester matrix.
/// Zero indicates a shared root. Signals of length 1 are constants and
/// cannot share a root; the margin is 1 by convention. Throws
/// DegenerateSignal when either signal is identically zero.
double coprimality_margin(const ComplexSignal& x1, const ComplexSignal& x2);

/// The cross-relation system built from a1 and a21: the Sylvester column
/// structure of P1 = z^{L1-1} A1(z) and P2 = z^{L2-1} A21(z), restricted to
/// the first L1 shifts of P2's coefficients and the first L2 shifts of
/// -P1's coefficients. The solution vector of the restricted system is
/// (x1; x2) up to a constant factor when the signal polynomials are
/// co-prime. Rows: max(d1 + d2, L1 + d2) so every shift fits; columns:
/// always L1 + L2.
Eigen::MatrixXcd cross_relation_matrix(const CorrelationVector& a1,
                                       const CorrelationVector& a21, int l1, int l2);

struct SylvesterOptions {
  /// Additionally stack the symmetric system built from (a2, a12).
  bool stack_symmetric = false;
  /// The two smallest singular values closer than gap_tol * sigma_max flag
  /// a non-unique solution direction.
  double gap_tol = 1e-6;
};

/// Classic reconstruction: smallest right singular vector of the
/// cross-relation system, rescaled so that the estimate's energy matches
/// Re(a1[0] + a2[0]). The result is determined up to a global phase.
/// Throws RankAmbiguity when the smallest singular-value gap is below
/// options.gap_tol * sigma_max.
std::pair<ComplexSignal, ComplexSignal> recover_sylvester(
    const CorrelationSet& set, const SylvesterOptions& options = {});

}  // namespace corrlift

#endif  // CORRLIFT_SYLVESTER_HPP
