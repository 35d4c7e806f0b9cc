#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "scatter/geometry.hpp"

namespace scatter {

/// Far-field constant of v ~ A e^{ikr}/sqrt(r): c = e^{i pi/4}/sqrt(8 pi k),
/// from the large-argument form of H_0^{(1)}.
std::complex<double> farfield_constant(double k);

struct FarFieldPattern {
    Eigen::Vector2d alpha;
    double k = 1.0;
    std::vector<double> angles;   // direction angles, uniform on [0, 2pi)
    Eigen::VectorXcd amplitudes;  // A(alpha'_l)
    std::complex<double> farfield_constant;
};

/// A(alpha') = -c * integral of e^{-ik alpha'.s'} h(s') ds' by trapezoid,
/// at L uniform directions.
FarFieldPattern far_field(const Eigen::VectorXcd& h, const BoundaryCurve& curve,
                          const Grid& grid, double k, const Eigen::Vector2d& alpha, int L);

struct ExteriorFieldSample {
    Eigen::Vector2d location;
    std::complex<double> total;
    std::complex<double> scattered;
};

/// u(x) = e^{ik alpha.x} + v(x), v(x) = -integral of g(x,s') h(s') ds'.
/// x must be at least 2 * grid spacing * max arc element away from S.
ExteriorFieldSample near_field(const Eigen::VectorXcd& h, const BoundaryCurve& curve,
                               const Grid& grid, double k, const Eigen::Vector2d& alpha,
                               const Eigen::Vector2d& x);

/// Dirichlet defect max |e^{ik alpha.s} - (T h)(s)| over n_test off-grid
/// boundary points (offset half a grid cell), evaluated with the split-kernel
/// quadrature recentered at each test point.
double boundary_residual(const Eigen::VectorXcd& h, const BoundaryCurve& curve,
                         const Grid& grid, double k, const Eigen::Vector2d& alpha,
                         int n_test);

/// Sound-soft disk density by separation of variables:
///   u_N(theta) = -(2i/(pi R)) sum_{|m| <= M} i^{|m|} e^{im(theta-theta_alpha)} / H_{|m|}^{(1)}(kR).
/// Rejects M too small for the series tail to be negligible (1e-14 of head).
Eigen::VectorXcd disk_density(double R, double k, const Eigen::Vector2d& alpha, int M_modes,
                              const Grid& grid);

/// Disk far field from the reflection coefficients -J_m(kR)/H_m^{(1)}(kR):
///   A(phi) = -sqrt(2/(pi k)) e^{-i pi/4} sum_m (J_{|m|}/H_{|m|})(kR) e^{im(phi-theta_alpha)}.
Eigen::VectorXcd disk_far_field(double R, double k, const Eigen::Vector2d& alpha,
                                const std::vector<double>& angles, int M_modes);

/// Eigenvalue of the single-layer operator on the unit circle for the Fourier
/// mode e^{im theta}: lambda_m = (i pi / 2) J_m(k) H_m^{(1)}(k). m <= 40.
std::complex<double> circle_operator_eigs(double k, int m);

}  // namespace scatter
