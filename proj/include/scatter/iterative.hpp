#pragma once

#include <Eigen/Core>

#include "scatter/galerkin.hpp"
#include "scatter/operators.hpp"

namespace scatter {

/// State of the Q-preconditioned fixed-point iteration for (I + A) h = F,
/// A = Q^{-1} K, F = Q^{-1} f. The iteration runs on sqrt(arc)-scaled
/// densities so Q is the stored symmetric positive definite matrix; in those
/// coordinates K = D T D^{-1} - Q with D = diag(sqrt(a)), and (Q + K) h = f
/// is exactly the Nystrom system T h = f.
struct IterationState {
    Eigen::MatrixXcd A;
    Eigen::VectorXcd F;
    Eigen::VectorXcd h;  // scaled iterate
    int iteration_count = 0;
    double last_step_norm = 0.0;
    double estimated_norm = 0.0;
};

/// Symmetric positive definite solve. The symmetric part of Q is checked for
/// positivity first; a non-SPD Q is a diagnostic failure and throws.
Eigen::VectorXcd solve_Q(const Eigen::MatrixXd& Q, const Eigen::VectorXcd& rhs);
Eigen::MatrixXcd solve_Q_matrix(const Eigen::MatrixXd& Q, const Eigen::MatrixXcd& rhs);

/// Largest singular value (discrete l2 operator norm).
double estimate_operator_norm(const Eigen::MatrixXcd& A);

struct NeumannOptions {
    double tol = 1e-10;
    int max_iter = 500;
};

/// Fixed-point iteration h_{m+1} = F - A h_m from h_0 = F. Refuses to run
/// when estimate_operator_norm(A) >= 1 (the caller should fall back to the
/// Galerkin path).
Eigen::VectorXcd neumann_solve(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& F,
                               const NeumannOptions& opts, IterationState* state = nullptr);

/// Builds A and F for the scattering problem and runs the iteration,
/// returning the density on the grid (unscaled samples).
DensitySolution iteration_solve(const BoundaryCurve& curve, const Grid& grid,
                                const OperatorMatrices& ops, double k,
                                const Eigen::Vector2d& alpha, const NeumannOptions& opts,
                                IterationState* state = nullptr);

/// A and F in the scaled coordinates (exposed for diagnostics and tests).
IterationState build_iteration(const OperatorMatrices& ops, const Grid& grid,
                               const Eigen::VectorXcd& f);

}  // namespace scatter
