#include "scatter/iterative.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "scatter/errors.hpp"

namespace scatter {

namespace {

Eigen::LLT<Eigen::MatrixXd> factor_spd(const Eigen::MatrixXd& q) {
    const Eigen::MatrixXd sym = 0.5 * (q + q.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues()(0);
    if (!(min_eig > 0)) {
        throw DomainError("Q is not symmetric positive definite (min eigenvalue " +
                          std::to_string(min_eig) + "); positivity diagnostic failed");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(sym);
    if (llt.info() != Eigen::Success) {
        throw DomainError("Cholesky factorization of Q failed");
    }
    return llt;
}

Eigen::MatrixXcd solve_with(const Eigen::LLT<Eigen::MatrixXd>& llt,
                            const Eigen::MatrixXcd& rhs) {
    const Eigen::MatrixXd re = llt.solve(rhs.real());
    const Eigen::MatrixXd im = llt.solve(rhs.imag());
    return re.cast<std::complex<double>>() +
           std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
}

}  // namespace

Eigen::VectorXcd solve_Q(const Eigen::MatrixXd& q, const Eigen::VectorXcd& rhs) {
    return solve_with(factor_spd(q), rhs).col(0);
}

Eigen::MatrixXcd solve_Q_matrix(const Eigen::MatrixXd& q, const Eigen::MatrixXcd& rhs) {
    return solve_with(factor_spd(q), rhs);
}

double estimate_operator_norm(const Eigen::MatrixXcd& a) {
    if (a.size() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    return svd.singularValues()(0);
}

Eigen::VectorXcd neumann_solve(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& f,
                               const NeumannOptions& opts, IterationState* state) {
    const double norm_est = estimate_operator_norm(a);
    if (!(norm_est < 1.0)) {
        throw SolverRefusal("Neumann iteration refused: estimated ||A|| = " +
                                std::to_string(norm_est) +
                                " >= 1; use the Galerkin solver",
                            norm_est);
    }

    const double fnorm = f.norm();
    Eigen::VectorXcd h = f;
    int count = 0;
    double step = 0.0;
    for (; count < opts.max_iter; ++count) {
        const Eigen::VectorXcd next = f - a * h;
        step = (next - h).norm();
        h = next;
        if (step <= opts.tol * (fnorm > 0 ? fnorm : 1.0)) break;
    }
    if (state) {
        state->A = a;
        state->F = f;
        state->h = h;
        state->iteration_count = count + 1;
        state->last_step_norm = step;
        state->estimated_norm = norm_est;
    }
    if (count == opts.max_iter) {
        throw SolverRefusal("Neumann iteration did not converge in " +
                                std::to_string(opts.max_iter) +
                                " iterations; last step " + std::to_string(step),
                            norm_est);
    }
    return h;
}

IterationState build_iteration(const OperatorMatrices& ops, const Grid& grid,
                               const Eigen::VectorXcd& f) {
    const int n = grid.n;
    Eigen::VectorXd sq(n);
    for (int i = 0; i < n; ++i) sq(i) = std::sqrt(grid.arc[i]);

    // T in the sqrt(arc)-scaled coordinates, matching the stored Q.
    Eigen::MatrixXcd t_scaled = ops.T;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            t_scaled(i, j) *= sq(i) / sq(j);
        }
    }
    const Eigen::MatrixXcd k_scaled = t_scaled - ops.Q.cast<std::complex<double>>();

    Eigen::VectorXcd f_scaled(n);
    for (int i = 0; i < n; ++i) f_scaled(i) = f(i) * sq(i);

    IterationState st;
    const auto llt = factor_spd(ops.Q);
    st.A = solve_with(llt, k_scaled);
    st.F = solve_with(llt, f_scaled).col(0);
    st.estimated_norm = estimate_operator_norm(st.A);
    return st;
}

DensitySolution iteration_solve(const BoundaryCurve& curve, const Grid& grid,
                                const OperatorMatrices& ops, double k,
                                const Eigen::Vector2d& alpha, const NeumannOptions& opts,
                                IterationState* state) {
    const Eigen::VectorXcd f = incident_trace(curve, grid, k, alpha);
    IterationState st = build_iteration(ops, grid, f);
    const Eigen::VectorXcd h_scaled = neumann_solve(st.A, st.F, opts, &st);

    DensitySolution sol;
    sol.method = DensitySolution::Method::Iteration;
    sol.h.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        sol.h(i) = h_scaled(i) / std::sqrt(grid.arc[i]);
    }
    const Eigen::VectorXcd res = ops.T * sol.h - f;
    sol.residual_h1 = res.norm() / (f.norm() > 0 ? f.norm() : 1.0);
    if (state) *state = st;
    return sol;
}

}  // namespace scatter
