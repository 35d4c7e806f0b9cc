#include "scatter/kernels.hpp"

#include <cmath>
#include <numbers>

#include "scatter/errors.hpp"
#include "scatter/specfun.hpp"

namespace scatter {

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kImag{0.0, 1.0};
}  // namespace

std::complex<double> kernel_g(const BoundaryCurve& curve, double k, double theta,
                              double theta_p) {
    const double r = (curve.point(theta) - curve.point(theta_p)).norm();
    if (r == 0.0) throw DomainError("kernel_g requires distinct boundary points");
    const auto [j0, y0] = bessel_j0y0(k * r);
    return 0.25 * kImag * std::complex<double>(j0, y0);
}

KernelSplit kernel_split(const BoundaryCurve& curve, double k, double theta, double theta_p) {
    KernelSplit out;
    const double r = (curve.point(theta) - curve.point(theta_p)).norm();
    const double s = 2.0 * std::abs(std::sin(0.5 * (theta - theta_p)));
    if (r == 0.0 || s == 0.0) {
        out.log_coefficient = -1.0 / (4.0 * kPi);
        out.smooth = 0.25 * kImag -
                     (kEulerGamma + std::log(0.5 * k * curve.arc_element(theta))) / (2.0 * kPi);
        return out;
    }
    const auto [j0, y0] = bessel_j0y0(k * r);
    out.log_coefficient = -j0 / (4.0 * kPi);
    const std::complex<double> g = 0.25 * kImag * std::complex<double>(j0, y0);
    out.smooth = g - out.log_coefficient * 2.0 * std::log(s);
    return out;
}

}  // namespace scatter
