#include <doctest.h>

#include <algorithm>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "scatter/fields.hpp"
#include "scatter/galerkin.hpp"
#include "scatter/studies.hpp"

using namespace scatter;
using cplx = std::complex<double>;

namespace {

struct Problem {
    BoundaryCurve curve;
    Grid grid;
    OperatorMatrices ops;
};

Problem setup(const CurveSpec& spec, int n, double k) {
    BoundaryCurve curve = make_curve(spec);
    Grid grid = quadrature_grid(curve, n);
    OperatorMatrices ops = assemble_operators(curve, grid, k);
    return {std::move(curve), std::move(grid), std::move(ops)};
}

double residual_norm(const GalerkinSystem& sys, const Grid& grid,
                     const Eigen::VectorXcd& coeff) {
    const Eigen::VectorXcd res = sys.t_basis * coeff - sys.rhs;
    const cplx nrm2 = (sys.inner == InnerKind::H0) ? inner_h0(res, res, grid)
                                                   : inner_h1(res, res, grid);
    return std::sqrt(std::abs(nrm2.real()));
}

}  // namespace

TEST_CASE("circle system is diagonal with |lambda_m|^2 entries (H0)") {
    auto p = setup(CurveSpec::circle(1.0), 256, 1.0);
    const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig, 1.0,
                                     21, InnerKind::H0, {1.0, 0.0});
    for (int j = 1; j <= 21; ++j) {
        const int m = std::abs(basis_mode(j));
        const double lam2 = std::norm(oracle::kUnitCircleLambda[m]);
        CHECK(std::abs(sys.a(j - 1, j - 1).real() - lam2) <= 1e-8);
        for (int i = 1; i <= 21; ++i) {
            if (i != j) CHECK(std::abs(sys.a(i - 1, j - 1)) <= 1e-10);
        }
    }
}

TEST_CASE("circle system diagonal carries the (1 + m^2) H1 weight") {
    auto p = setup(CurveSpec::circle(1.0), 256, 1.0);
    const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig, 1.0,
                                     21, InnerKind::H1, {1.0, 0.0});
    for (int j = 1; j <= 21; ++j) {
        const int m = std::abs(basis_mode(j));
        const double expect = std::norm(oracle::kUnitCircleLambda[m]) * (1.0 + m * m);
        CHECK(std::abs(sys.a(j - 1, j - 1).real() - expect) <= 1e-8);
    }
}

TEST_CASE("sine load entries vanish for axis-aligned incidence") {
    auto p = setup(CurveSpec::circle(1.0), 256, 1.0);
    const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig, 1.0,
                                     21, InnerKind::H0, {1.0, 0.0});
    for (int j = 3; j <= 21; j += 2) {  // sine modes
        CHECK(std::abs(sys.f(j - 1)) <= 1e-12);
    }
}

TEST_CASE("galerkin solution reproduces the disk density") {
    auto p = setup(CurveSpec::circle(1.0), 256, 1.0);
    const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig, 1.0,
                                     21, InnerKind::H1, {1.0, 0.0});
    const auto sol = solve_system(sys, p.grid);
    const auto href = disk_density(1.0, 1.0, {1.0, 0.0}, disk_oracle_modes(1.0, 1.0), p.grid);
    CHECK(relative_l2(sol.h, href, p.grid) <= 1e-6);

    // reconstruction invariant: h is exactly the basis expansion of c
    const Eigen::VectorXcd rebuilt = sys.basis * sol.coefficients;
    CHECK((rebuilt - sol.h).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("kite residual decreases by at least 2x per J step") {
    auto p = setup(CurveSpec::kite(), 256, 1.0);
    double last = std::numeric_limits<double>::infinity();
    std::vector<double> residuals;
    for (int J : {9, 17, 33}) {
        const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig,
                                         1.0, J, InnerKind::H1, {1.0, 0.0});
        const auto sol = solve_system(sys, p.grid);
        residuals.push_back(sol.residual_h1);
        CHECK(sol.residual_h1 <= 0.5 * last);
        last = sol.residual_h1;
    }
}

TEST_CASE("modes beyond the content of f get negligible coefficients") {
    auto p = setup(CurveSpec::circle(1.0), 256, 1.0);
    const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig, 1.0,
                                     33, InnerKind::H1, {1.0, 0.0});
    const auto sol = solve_system(sys, p.grid);
    for (int j = 24; j <= 33; ++j) {  // modes m >= 12
        CHECK(std::abs(sol.coefficients(j - 1)) <= 1e-10);
    }
}

TEST_CASE("condition_number basics") {
    CHECK(condition_number(Eigen::MatrixXcd::Identity(5, 5)) == doctest::Approx(1.0));
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 1e-6;
    CHECK(condition_number(d) == doctest::Approx(1e6).epsilon(1e-10));
    d(1, 1) = 0.0;
    CHECK(std::isinf(condition_number(d)));
}

TEST_CASE("circle H1 condition number matches the analytic diagonal") {
    auto p = setup(CurveSpec::circle(1.0), 256, 1.0);
    const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig, 1.0,
                                     33, InnerKind::H1, {1.0, 0.0});
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 33; ++j) {
        const int m = std::abs(basis_mode(j));
        const double e = std::norm(oracle::kUnitCircleLambda[m]) * (1.0 + m * m);
        dmax = std::max(dmax, e);
        dmin = std::min(dmin, e);
    }
    CHECK(condition_number(sys.a) == doctest::Approx(dmax / dmin).epsilon(1e-6));
}

TEST_CASE("H0 conditioning grows like J^2 on the circle") {
    auto p = setup(CurveSpec::circle(1.0), 256, 1.0);
    const auto cond_at = [&](int J) {
        const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig,
                                         1.0, J, InnerKind::H0, {1.0, 0.0});
        return condition_number(sys.a);
    };
    const double r = cond_at(65) / cond_at(33);
    CHECK(r >= 3.0);
    CHECK(r <= 5.0);
}

TEST_CASE("solved coefficients minimize the residual") {
    auto p = setup(CurveSpec::ellipse(2.0, 1.0), 128, 1.0);
    const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig, 1.0,
                                     17, InnerKind::H1, {1.0, 0.0});
    const auto sol = solve_system(sys, p.grid);
    const double base = residual_norm(sys, p.grid, sol.coefficients);
    CHECK(base == doctest::Approx(sol.residual_h1).epsilon(1e-10));

    for (int j : {0, 3, 8, 16}) {
        for (const cplx d : {cplx(1e-4, 0.0), cplx(-1e-4, 0.0), cplx(0.0, 1e-4),
                             cplx(0.0, -1e-4)}) {
            Eigen::VectorXcd c = sol.coefficients;
            c(j) += d;
            CHECK(residual_norm(sys, p.grid, c) >= base);
        }
    }
}

TEST_CASE("solution is invariant under basis reordering") {
    auto p = setup(CurveSpec::ellipse(2.0, 1.0), 128, 1.0);
    const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig, 1.0,
                                     17, InnerKind::H1, {1.0, 0.0});
    const auto sol = solve_system(sys, p.grid);

    std::vector<int> perm(17);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(12345);
    std::shuffle(perm.begin(), perm.end(), rng);

    GalerkinSystem shuffled = sys;
    for (int i = 0; i < 17; ++i) {
        shuffled.basis.col(i) = sys.basis.col(perm[i]);
        shuffled.t_basis.col(i) = sys.t_basis.col(perm[i]);
    }
    shuffled.a = gram_of_columns(shuffled.t_basis, shuffled.t_basis, p.grid, InnerKind::H1);
    shuffled.f = gram_of_columns(shuffled.rhs, shuffled.t_basis, p.grid, InnerKind::H1).col(0);
    const auto sol2 = solve_system(shuffled, p.grid);

    CHECK((sol2.h - sol.h).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("the projection matrix stays invertible across J") {
    auto p = setup(CurveSpec::kite(), 128, 1.0);
    for (int J : {5, 9, 17, 33}) {
        const auto sys = assemble_system(p.curve, p.grid, p.ops, BasisFamily::WeightedTrig,
                                         1.0, J, InnerKind::H1, {1.0, 0.0});
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys.a);
        CHECK(svd.singularValues()(J - 1) > 0.0);
    }
}
