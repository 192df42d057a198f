// SPDX-License-Identifier: Apache-2.0
//
// corrlift: recovery of signal pairs from correlation measurements.

#ifndef CORRLIFT_PSD_SOLVER_HPP
#define CORRLIFT_PSD_SOLVER_HPP

#include <tuple>
#include <vector>

#include "corrlift/sensing.hpp"
#include "corrlift/signal.hpp"

namespace corrlift {

enum class StepRule { fixed, backtracking };

struct SolverOptions {
  int max_iters = 50000;
  double rel_tol = 1e-12;
  StepRule step_rule = StepRule::fixed;
  bool acceleration = true;
  /// Record the objective value of every iterate in diagnostics.trace.
  bool record_trace = false;
};

struct SolveDiagnostics {
  double objective = 0.0;      // final ||forward(X) - b||^2
  int iters = 0;
  double eig_ratio = 0.0;      // lambda_2 / lambda_1 of the solution
  bool converged = false;
  std::vector<double> trace;   // per-iteration objective when recorded
};

/// Frobenius-nearest positive semidefinite matrix: eigendecomposes and
/// clips negative eigenvalues at zero. Throws EigenFailure if the
/// eigensolver does not converge.
HermitianMatrix project_psd(const HermitianMatrix& x);

/// Minimizes ||forward(X) - b||^2 over the PSD cone by projected gradient
/// descent, optionally Nesterov-accelerated with restart on objective
/// increase (accepted iterates are always non-increasing). The fixed step
/// is 1 / ||A||_op^2 on the half-gradient adjoint(forward(X) - b), with
/// ||A||_op^2 estimated by power iteration; backtracking halves from there.
/// Stops when the objective decrease over a 10-iteration window falls below
/// rel_tol relative, when the objective reaches the floating-point floor,
/// or at max_iters (diagnostics.converged = false, result still returned).
std::pair<HermitianMatrix, SolveDiagnostics> solve_psd_least_squares(
    const SensingOperator& op, const Eigen::VectorXcd& b, const SolverOptions& opts = {});

/// Best rank-one factor sqrt(lambda_1) v_1 of a PSD matrix, with the global
/// phase rotated so the largest-magnitude entry is real positive. Throws
/// ZeroMatrix when the leading eigenvalue is not positive.
ComplexSignal extract_rank_one(const HermitianMatrix& x);

/// Lifted recovery: builds the sensing operator, solves the PSD
/// least-squares program, extracts the rank-one factor and splits it at L1.
std::tuple<ComplexSignal, ComplexSignal, SolveDiagnostics> recover_sdp(
    const CorrelationSet& set, const SolverOptions& opts = {});

/// Recovery from the measurements of several splits of one length-N signal.
/// Returns the full length-N estimate.
std::pair<ComplexSignal, SolveDiagnostics> recover_sdp_multi(
    int n, const std::map<int, CorrelationSet>& sets_by_split,
    const SolverOptions& opts = {});

}  // namespace corrlift

#endif  // CORRLIFT_PSD_SOLVER_HPP
