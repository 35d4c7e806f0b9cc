#include "scatter/galerkin.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "scatter/errors.hpp"

namespace scatter {

Eigen::VectorXcd incident_trace(const BoundaryCurve& curve, const Grid& grid, double k,
                                const Eigen::Vector2d& alpha) {
    Eigen::VectorXcd f(grid.n);
    const std::complex<double> ik{0.0, k};
    for (int i = 0; i < grid.n; ++i) {
        f(i) = std::exp(ik * alpha.dot(curve.point(grid.nodes[i])));
    }
    return f;
}

GalerkinSystem assemble_system(const BoundaryCurve& curve, const Grid& grid,
                               const OperatorMatrices& ops, BasisFamily family, double k,
                               int J, InnerKind inner, const Eigen::Vector2d& alpha) {
    GalerkinSystem sys;
    sys.J = J;
    sys.inner = inner;
    sys.family = family;
    sys.k = k;
    sys.basis = basis_matrix(family, curve, k, J, grid);
    sys.t_basis = ops.T * sys.basis;
    sys.rhs = incident_trace(curve, grid, k, alpha);

    sys.a = gram_of_columns(sys.t_basis, sys.t_basis, grid, inner);
    sys.a = 0.5 * (sys.a + sys.a.adjoint().eval());
    sys.f = gram_of_columns(sys.rhs, sys.t_basis, grid, inner).col(0);
    return sys;
}

DensitySolution solve_system(const GalerkinSystem& sys, const Grid& grid) {
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(sys.a);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
        throw SolverRefusal("Galerkin factorization failed (near-resonance?)", 0.0);
    }
    DensitySolution sol;
    sol.method = DensitySolution::Method::Galerkin;
    sol.coefficients = ldlt.solve(sys.f);
    sol.h = sys.basis * sol.coefficients;

    const Eigen::VectorXcd res = sys.t_basis * sol.coefficients - sys.rhs;
    const std::complex<double> nrm2 = (sys.inner == InnerKind::H0)
                                          ? inner_h0(res, res, grid)
                                          : inner_h1(res, res, grid);
    sol.residual_h1 = std::sqrt(std::abs(nrm2.real()));
    return sol;
}

double condition_number(const Eigen::MatrixXcd& matrix) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0 || !std::isfinite(smax)) {
        return std::numeric_limits<double>::infinity();
    }
    return smax / smin;
}

}  // namespace scatter
