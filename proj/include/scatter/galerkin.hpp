#pragma once

#include <Eigen/Core>
#include <complex>

#include "scatter/basis.hpp"
#include "scatter/geometry.hpp"
#include "scatter/operators.hpp"

namespace scatter {

/// Projection system a c = f with a_ij = (T phi_j, T phi_i) and
/// f_i = (f, T phi_i) in the selected inner product. Grid-side samples are
/// kept so the solution can be reconstructed and its residual evaluated.
struct GalerkinSystem {
    int J = 0;
    InnerKind inner = InnerKind::H1;
    BasisFamily family = BasisFamily::WeightedTrig;
    double k = 1.0;
    Eigen::MatrixXcd a;        // J x J Gram of {T phi_j}
    Eigen::VectorXcd f;        // length-J load vector
    Eigen::MatrixXcd basis;    // n x J samples of phi_j
    Eigen::MatrixXcd t_basis;  // n x J samples of T phi_j
    Eigen::VectorXcd rhs;      // grid samples of f(theta) = e^{ik alpha . x(theta)}
};

struct DensitySolution {
    enum class Method { Galerkin, Iteration };
    Eigen::VectorXcd coefficients;  // empty for Method::Iteration
    Eigen::VectorXcd h;             // grid samples of the density
    double residual_h1 = 0.0;       // residual in the system's inner-product norm
    Method method = Method::Galerkin;
};

/// Grid samples of the incident trace f(theta) = e^{ik alpha . x(theta)}.
Eigen::VectorXcd incident_trace(const BoundaryCurve& curve, const Grid& grid, double k,
                                const Eigen::Vector2d& alpha);

GalerkinSystem assemble_system(const BoundaryCurve& curve, const Grid& grid,
                               const OperatorMatrices& ops, BasisFamily family, double k,
                               int J, InnerKind inner, const Eigen::Vector2d& alpha);

/// Dense Hermitian positive definite solve; the residual is evaluated on the
/// grid in the system's norm.
DensitySolution solve_system(const GalerkinSystem& sys, const Grid& grid);

/// sigma_max / sigma_min by full SVD; +infinity when the smallest singular
/// value underflows to zero.
double condition_number(const Eigen::MatrixXcd& matrix);

}  // namespace scatter
