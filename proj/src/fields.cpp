#include "scatter/fields.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "scatter/errors.hpp"
#include "scatter/operators.hpp"
#include "scatter/specfun.hpp"

namespace scatter {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const std::complex<double> kImag{0.0, 1.0};

double direction_angle(const Eigen::Vector2d& v) { return std::atan2(v.y(), v.x()); }

std::complex<double> ipow(int m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}
}  // namespace

std::complex<double> farfield_constant(double k) {
    return std::exp(kImag * (kPi / 4.0)) / std::sqrt(8.0 * kPi * k);
}

FarFieldPattern far_field(const Eigen::VectorXcd& h, const BoundaryCurve& curve,
                          const Grid& grid, double k, const Eigen::Vector2d& alpha, int L) {
    FarFieldPattern out;
    out.alpha = alpha;
    out.k = k;
    out.farfield_constant = farfield_constant(k);
    out.angles.resize(L);
    out.amplitudes.resize(L);

    std::vector<Eigen::Vector2d> pts(grid.n);
    for (int j = 0; j < grid.n; ++j) pts[j] = curve.point(grid.nodes[j]);

    for (int l = 0; l < L; ++l) {
        const double phi = kTwoPi * l / L;
        out.angles[l] = phi;
        const Eigen::Vector2d dir{std::cos(phi), std::sin(phi)};
        std::complex<double> acc = 0.0;
        for (int j = 0; j < grid.n; ++j) {
            acc += grid.weight * grid.arc[j] * std::exp(-kImag * k * dir.dot(pts[j])) * h(j);
        }
        out.amplitudes(l) = -out.farfield_constant * acc;
    }
    return out;
}

ExteriorFieldSample near_field(const Eigen::VectorXcd& h, const BoundaryCurve& curve,
                               const Grid& grid, double k, const Eigen::Vector2d& alpha,
                               const Eigen::Vector2d& x) {
    double max_arc = 0.0;
    for (double a : grid.arc) max_arc = std::max(max_arc, a);
    const double guard = 2.0 * grid.weight * max_arc;

    double dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid.n; ++j) {
        dist = std::min(dist, (x - curve.point(grid.nodes[j])).norm());
    }
    if (dist < guard) {
        throw DomainError("near_field evaluation point closer than the accuracy guard " +
                          std::to_string(guard));
    }

    std::complex<double> v = 0.0;
    for (int j = 0; j < grid.n; ++j) {
        const double r = (x - curve.point(grid.nodes[j])).norm();
        const auto [j0, y0] = bessel_j0y0(k * r);
        v -= grid.weight * grid.arc[j] * 0.25 * kImag * std::complex<double>(j0, y0) * h(j);
    }

    ExteriorFieldSample s;
    s.location = x;
    s.scattered = v;
    s.total = std::exp(kImag * k * alpha.dot(x)) + v;
    return s;
}

double boundary_residual(const Eigen::VectorXcd& h, const BoundaryCurve& curve,
                         const Grid& grid, double k, const Eigen::Vector2d& alpha,
                         int n_test) {
    const int n = grid.n;
    std::vector<Eigen::Vector2d> pts(n);
    for (int j = 0; j < n; ++j) pts[j] = curve.point(grid.nodes[j]);

    double worst = 0.0;
    for (int t = 0; t < n_test; ++t) {
        const double ts = kTwoPi * t / n_test + kPi / n;  // half a grid cell off the nodes
        const Eigen::Vector2d xs = curve.point(ts);
        const auto rw = log_quadrature_weights_at(grid, ts);

        std::complex<double> th = 0.0;
        for (int j = 0; j < n; ++j) {
            const double r = (xs - pts[j]).norm();
            const double s = 2.0 * std::abs(std::sin(0.5 * (ts - grid.nodes[j])));
            const auto [j0, y0] = bessel_j0y0(k * r);
            const std::complex<double> lc = -j0 / (4.0 * kPi);
            const std::complex<double> sm =
                0.25 * kImag * std::complex<double>(j0, y0) - lc * 2.0 * std::log(s);
            th += (rw[j] * lc + grid.weight * sm) * grid.arc[j] * h(j);
        }
        const std::complex<double> f = std::exp(kImag * k * alpha.dot(xs));
        worst = std::max(worst, std::abs(f - th));
    }
    return worst;
}

Eigen::VectorXcd disk_density(double R, double k, const Eigen::Vector2d& alpha, int M_modes,
                              const Grid& grid) {
    if (!(R > 0) || M_modes < 0) throw DomainError("disk_density: bad parameters");
    const double theta_a = direction_angle(alpha);

    std::vector<double> jv, yv;
    bessel_jy(M_modes + 1, k * R, jv, yv);

    // tail check: the modal coefficients decay like 1/|H_m|
    const double head = 1.0 / std::abs(std::complex<double>(jv[0], yv[0]));
    const double tail = 1.0 / std::abs(std::complex<double>(jv[M_modes + 1], yv[M_modes + 1]));
    if (tail > 1e-14 * head) {
        throw DomainError("disk_density: M_modes=" + std::to_string(M_modes) +
                          " leaves a series tail above 1e-14 of the head");
    }

    Eigen::VectorXcd u(grid.n);
    const std::complex<double> front = -2.0 * kImag / (kPi * R);
    for (int i = 0; i < grid.n; ++i) {
        std::complex<double> acc = 0.0;
        for (int m = -M_modes; m <= M_modes; ++m) {
            const int am = std::abs(m);
            const std::complex<double> hm{jv[am], yv[am]};
            acc += ipow(am) * std::exp(kImag * static_cast<double>(m) * (grid.nodes[i] - theta_a)) / hm;
        }
        u(i) = front * acc;
    }
    return u;
}

Eigen::VectorXcd disk_far_field(double R, double k, const Eigen::Vector2d& alpha,
                                const std::vector<double>& angles, int M_modes) {
    if (!(R > 0) || M_modes < 0) throw DomainError("disk_far_field: bad parameters");
    const double theta_a = direction_angle(alpha);

    std::vector<double> jv, yv;
    bessel_jy(M_modes, k * R, jv, yv);

    const std::complex<double> front =
        -std::sqrt(2.0 / (kPi * k)) * std::exp(-kImag * (kPi / 4.0));
    Eigen::VectorXcd out(static_cast<int>(angles.size()));
    for (std::size_t l = 0; l < angles.size(); ++l) {
        std::complex<double> acc = 0.0;
        for (int m = -M_modes; m <= M_modes; ++m) {
            const int am = std::abs(m);
            const std::complex<double> hm{jv[am], yv[am]};
            acc += (jv[am] / hm) *
                   std::exp(kImag * static_cast<double>(m) * (angles[l] - theta_a));
        }
        out(static_cast<int>(l)) = front * acc;
    }
    return out;
}

std::complex<double> circle_operator_eigs(double k, int m) {
    if (m < 0 || m > 40) throw DomainError("circle_operator_eigs supports 0 <= m <= 40");
    std::vector<double> jv, yv;
    bessel_jy(m, k, jv, yv);
    return 0.5 * kImag * kPi * jv[m] * std::complex<double>(jv[m], yv[m]);
}

}  // namespace scatter
