#include "scatter/basis.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "scatter/errors.hpp"
#include "scatter/specfun.hpp"
#include "scatter/spectral.hpp"

namespace scatter {

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kImag{0.0, 1.0};

void check_resolution(int J, int n) {
    if (J < 1) throw DomainError("basis size J must be >= 1");
    if (J > n / 2 - 1) {
        throw DomainError("resolution guard violated: J=" + std::to_string(J) +
                          " exceeds n/2-1=" + std::to_string(n / 2 - 1));
    }
}

// Derivative samples of each column, divided by the arc element (arc-length
// derivative on the grid).
Eigen::MatrixXcd arc_derivative(const Eigen::MatrixXcd& u, const Grid& grid) {
    const Eigen::MatrixXd d = periodic_derivative_matrix(grid.n);
    Eigen::MatrixXcd us = d * u;
    for (int i = 0; i < grid.n; ++i) us.row(i) /= grid.arc[i];
    return us;
}

}  // namespace

BasisFamily parse_family(std::string_view name) {
    if (name == "weighted-trig") return BasisFamily::WeightedTrig;
    if (name == "hankel") return BasisFamily::HankelRadial;
    if (name == "bessel") return BasisFamily::BesselRadial;
    throw ConfigError("unknown basis family: " + std::string(name));
}

std::string family_name(BasisFamily family) {
    switch (family) {
        case BasisFamily::WeightedTrig: return "weighted-trig";
        case BasisFamily::HankelRadial: return "hankel";
        case BasisFamily::BesselRadial: return "bessel";
    }
    return {};
}

InnerKind parse_inner(std::string_view name) {
    if (name == "h0") return InnerKind::H0;
    if (name == "h1") return InnerKind::H1;
    throw ConfigError("unknown inner product: " + std::string(name));
}

std::string inner_name(InnerKind inner) { return inner == InnerKind::H0 ? "h0" : "h1"; }

int basis_mode(int j) {
    if (j < 1) throw DomainError("basis index must be >= 1");
    if (j == 1) return 0;
    const int m = j / 2;
    return (j % 2 == 0) ? m : -m;
}

std::complex<double> eval_basis(BasisFamily family, const BoundaryCurve& curve, double k,
                                int j, double theta) {
    const int mode = basis_mode(j);
    if (family == BasisFamily::WeightedTrig) {
        const double a = curve.arc_element(theta);
        if (j == 1) return 1.0 / std::sqrt(2.0 * kPi * a);
        const int m = j / 2;
        const double trig = (j % 2 == 0) ? std::cos(m * theta) : std::sin(m * theta);
        return trig / std::sqrt(kPi * a);
    }
    const int m = std::abs(mode);
    const double x = k * curve.radius(theta);
    std::complex<double> radial;
    if (family == BasisFamily::HankelRadial) {
        radial = hankel1(m, x);
    } else {
        radial = bessel_j(m, x);
    }
    if (mode < 0 && m % 2 == 1) radial = -radial;  // C_{-m} = (-1)^m C_m
    return std::exp(kImag * static_cast<double>(mode) * theta) * radial;
}

Eigen::MatrixXcd basis_matrix(BasisFamily family, const BoundaryCurve& curve, double k,
                              int J, const Grid& grid) {
    check_resolution(J, grid.n);
    Eigen::MatrixXcd b(grid.n, J);
    for (int j = 1; j <= J; ++j) {
        for (int i = 0; i < grid.n; ++i) {
            b(i, j - 1) = eval_basis(family, curve, k, j, grid.nodes[i]);
        }
    }
    return b;
}

std::complex<double> inner_h0(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v,
                              const Grid& grid) {
    if (u.size() != grid.n || v.size() != grid.n) {
        throw DomainError("inner product requires samples on the grid");
    }
    std::complex<double> acc = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        acc += grid.weight * grid.arc[i] * u(i) * std::conj(v(i));
    }
    return acc;
}

std::complex<double> inner_h1(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v,
                              const Grid& grid) {
    if (u.size() != grid.n || v.size() != grid.n) {
        throw DomainError("inner product requires samples on the grid");
    }
    const Eigen::MatrixXcd us = arc_derivative(u, grid);
    const Eigen::MatrixXcd vs = arc_derivative(v, grid);
    return inner_h0(u, v, grid) + inner_h0(us.col(0), vs.col(0), grid);
}

Eigen::MatrixXcd gram_of_columns(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                                 const Grid& grid, InnerKind inner) {
    Eigen::VectorXd w(grid.n);
    for (int i = 0; i < grid.n; ++i) w(i) = grid.weight * grid.arc[i];

    Eigen::MatrixXcd g = v.adjoint() * w.asDiagonal() * u;
    if (inner == InnerKind::H1) {
        const Eigen::MatrixXcd us = arc_derivative(u, grid);
        const Eigen::MatrixXcd vs = arc_derivative(v, grid);
        g += vs.adjoint() * w.asDiagonal() * us;
    }
    return g;
}

Eigen::MatrixXcd basis_gram(BasisFamily family, const BoundaryCurve& curve, double k, int J,
                            InnerKind inner, const Grid& grid) {
    check_resolution(J, grid.n);
    const Eigen::MatrixXcd b = basis_matrix(family, curve, k, J, grid);
    Eigen::MatrixXcd g = gram_of_columns(b, b, grid, inner);
    // the inner products are Hermitian up to rounding; enforce exactly
    g = 0.5 * (g + g.adjoint().eval());
    return g;
}

RieszBounds estimate_riesz_bounds(BasisFamily family, const BoundaryCurve& curve, double k,
                                  int J, const Grid& grid) {
    const Eigen::MatrixXcd g = basis_gram(family, curve, k, J, InnerKind::H0, grid);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
    RieszBounds rb;
    rb.lower = es.eigenvalues()(0);
    rb.upper = es.eigenvalues()(J - 1);
    rb.family = family;
    rb.J = J;
    return rb;
}

}  // namespace scatter
