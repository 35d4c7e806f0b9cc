#include "scatter/operators.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "scatter/errors.hpp"
#include "scatter/specfun.hpp"

namespace scatter {

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kImag{0.0, 1.0};
}  // namespace

std::vector<double> log_quadrature_weights(int n) {
    std::vector<double> r(n);
    for (int d = 0; d < n; ++d) {
        double s = 0.0;
        for (int m = 1; m < n / 2; ++m) {
            s += std::cos(2.0 * kPi * m * d / n) / m;
        }
        const double nyq = (d % 2 == 0) ? 1.0 : -1.0;
        r[d] = -(4.0 * kPi / n) * s - (4.0 * kPi / (n * n)) * nyq;
    }
    return r;
}

std::vector<double> log_quadrature_weights_at(const Grid& grid, double t) {
    const int n = grid.n;
    std::vector<double> r(n);
    for (int j = 0; j < n; ++j) {
        const double dt = t - grid.nodes[j];
        double s = 0.0;
        for (int m = 1; m < n / 2; ++m) {
            s += std::cos(m * dt) / m;
        }
        r[j] = -(4.0 * kPi / n) * s - (4.0 * kPi / (n * n)) * std::cos(0.5 * n * dt);
    }
    return r;
}

Eigen::MatrixXcd assemble_T(const BoundaryCurve& curve, const Grid& grid, double k) {
    const int n = grid.n;
    const auto rw = log_quadrature_weights(n);

    std::vector<Eigen::Vector2d> pts(n);
    for (int j = 0; j < n; ++j) pts[j] = curve.point(grid.nodes[j]);

    Eigen::MatrixXcd t(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::complex<double> lc, sm;
            if (i == j) {
                lc = -1.0 / (4.0 * kPi);
                sm = 0.25 * kImag -
                     (kEulerGamma + std::log(0.5 * k * grid.arc[i])) / (2.0 * kPi);
            } else {
                const double r = (pts[i] - pts[j]).norm();
                const double s = 2.0 * std::abs(std::sin(0.5 * (grid.nodes[i] - grid.nodes[j])));
                const auto [j0, y0] = bessel_j0y0(k * r);
                lc = -j0 / (4.0 * kPi);
                sm = 0.25 * kImag * std::complex<double>(j0, y0) - lc * 2.0 * std::log(s);
            }
            const int d = ((i - j) % n + n) % n;
            t(i, j) = (rw[d] * lc + grid.weight * sm) * grid.arc[j];
        }
    }
    return t;
}

Eigen::MatrixXd assemble_Q(const BoundaryCurve& curve, const Grid& grid) {
    const int n = grid.n;
    const double a_diam = curve.diameter();
    const auto rw = log_quadrature_weights(n);

    std::vector<Eigen::Vector2d> pts(n);
    std::vector<double> sq(n);
    for (int j = 0; j < n; ++j) {
        pts[j] = curve.point(grid.nodes[j]);
        sq[j] = std::sqrt(grid.arc[j]);
    }

    Eigen::MatrixXd q(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double smooth;
            if (i == j) {
                smooth = (std::log(a_diam) - std::log(grid.arc[i])) / (2.0 * kPi);
            } else {
                const double r = (pts[i] - pts[j]).norm();
                const double s = 2.0 * std::abs(std::sin(0.5 * (grid.nodes[i] - grid.nodes[j])));
                smooth = (std::log(a_diam) - std::log(r / s)) / (2.0 * kPi);
            }
            const int d = ((i - j) % n + n) % n;
            q(i, j) = (-rw[d] / (4.0 * kPi) + grid.weight * smooth) * sq[i] * sq[j];
        }
    }
    return q;
}

Eigen::MatrixXcd assemble_K(const BoundaryCurve& curve, const Grid& grid, double k) {
    return assemble_T(curve, grid, k) - assemble_Q(curve, grid).cast<std::complex<double>>();
}

OperatorMatrices assemble_operators(const BoundaryCurve& curve, const Grid& grid, double k) {
    OperatorMatrices ops;
    ops.grid = grid;
    ops.T = assemble_T(curve, grid, k);
    ops.Q = assemble_Q(curve, grid);
    ops.K = ops.T - ops.Q.cast<std::complex<double>>();
    return ops;
}

double resonance_ratio(const Eigen::MatrixXcd& t) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(t);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0.0;
    return sv(sv.size() - 1) / sv(0);
}

}  // namespace scatter
