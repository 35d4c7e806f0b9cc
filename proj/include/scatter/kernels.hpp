#pragma once

#include <complex>

#include "scatter/geometry.hpp"

namespace scatter {

/// Free-space kernel g(s,s') = (i/4) H_0^{(1)}(k |x(theta) - x(theta')|).
/// Coincident points are rejected; the split form below owns the diagonal.
std::complex<double> kernel_g(const BoundaryCurve& curve, double k, double theta,
                              double theta_p);

/// Factorization g = log_coefficient * ln(4 sin^2((theta-theta')/2)) + smooth with
///   log_coefficient = -(1/4pi) J_0(k r),
///   smooth(theta,theta) = i/4 - (1/2pi)(gamma + ln(k a(theta)/2)).
/// The ratio r/(2|sin((theta-theta')/2)|) is smooth with diagonal value a(theta),
/// which is what makes the diagonal explicit.
struct KernelSplit {
    std::complex<double> log_coefficient;
    std::complex<double> smooth;
};

KernelSplit kernel_split(const BoundaryCurve& curve, double k, double theta, double theta_p);

}  // namespace scatter
