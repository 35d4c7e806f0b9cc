#pragma once

#include <Eigen/Core>
#include <complex>

#include "scatter/geometry.hpp"

namespace scatter {

struct ProblemConfig {
    double k = 1.0;
    Eigen::Vector2d alpha{1.0, 0.0};  // unit incident direction
};

/// Dense Nystrom matrices on a Grid.
///
/// T acts on raw grid samples: (T h)(theta_i) ~ sum_j T[i,j] h(theta_j); its
/// column weights carry a(theta_j), so T[i,j]/a_j is symmetric.
///
/// Q is stored in the sqrt(arc)-similarity convention
///     Q[i,j] = w_ij q(theta_i,theta_j) sqrt(a_i a_j),
/// i.e. the representation of the same Nystrom operator in the coordinates
/// sqrt(a)•h, which makes the matrix literally symmetric positive definite.
/// K := T - Q keeps the splitting identity exact by construction.
struct OperatorMatrices {
    Grid grid;
    Eigen::MatrixXcd T;
    Eigen::MatrixXd Q;
    Eigen::MatrixXcd K;
};

/// Quadrature weights R_d for the periodic log kernel:
/// integral of ln(4 sin^2((t-tau)/2)) f(tau) dtau ~ sum_j R_{|i-j|} f(t_j),
/// exact for trigonometric polynomials of degree < n/2.
std::vector<double> log_quadrature_weights(int n);

/// Same rule recentered at an arbitrary target t (off-grid evaluation).
std::vector<double> log_quadrature_weights_at(const Grid& grid, double t);

Eigen::MatrixXcd assemble_T(const BoundaryCurve& curve, const Grid& grid, double k);
Eigen::MatrixXd assemble_Q(const BoundaryCurve& curve, const Grid& grid);
Eigen::MatrixXcd assemble_K(const BoundaryCurve& curve, const Grid& grid, double k);
OperatorMatrices assemble_operators(const BoundaryCurve& curve, const Grid& grid, double k);

/// sigma_min / sigma_max of T. Values below 1e-8 indicate an interior
/// resonance (k^2 close to a Dirichlet eigenvalue of the domain).
double resonance_ratio(const Eigen::MatrixXcd& T);
inline constexpr double kResonanceThreshold = 1e-8;

}  // namespace scatter
