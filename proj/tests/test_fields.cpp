#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "scatter/errors.hpp"
#include "scatter/fields.hpp"
#include "scatter/galerkin.hpp"
#include "scatter/specfun.hpp"
#include "scatter/studies.hpp"

using namespace scatter;
using cplx = std::complex<double>;

namespace {
const double kTwoPi = 2.0 * oracle::kPi;

struct DiskProblem {
    BoundaryCurve curve;
    Grid grid;
    DensitySolution sol;
};

DiskProblem solved_disk(double R = 1.0, int J = 21, int n = 256) {
    BoundaryCurve curve = make_curve(CurveSpec::circle(R));
    Grid grid = quadrature_grid(curve, n);
    const auto ops = assemble_operators(curve, grid, 1.0);
    const auto sys = assemble_system(curve, grid, ops, BasisFamily::WeightedTrig, 1.0, J,
                                     InnerKind::H1, {1.0, 0.0});
    DensitySolution sol = solve_system(sys, grid);
    return {std::move(curve), std::move(grid), std::move(sol)};
}
}  // namespace

TEST_CASE("far-field constant: modulus 1/sqrt(8 pi), phase pi/4") {
    const cplx c = farfield_constant(1.0);
    CHECK(std::abs(c) == doctest::Approx(1.0 / std::sqrt(8.0 * oracle::kPi)).epsilon(1e-14));
    CHECK(std::arg(c) == doctest::Approx(oracle::kPi / 4.0).epsilon(1e-14));
    CHECK(c.real() == doctest::Approx(0.14104739588693905).epsilon(1e-12));
    CHECK(c.imag() == doctest::Approx(0.14104739588693905).epsilon(1e-12));
}

TEST_CASE("zero density gives a zero far field and a pure incident near field") {
    const auto c = make_curve(CurveSpec::circle(1.0));
    const auto g = quadrature_grid(c, 64);
    const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(g.n);
    const auto ff = far_field(zero, c, g, 1.0, {1.0, 0.0}, 32);
    CHECK(ff.amplitudes.cwiseAbs().maxCoeff() == 0.0);

    const Eigen::Vector2d x(7.0, -3.0);
    const auto nf = near_field(zero, c, g, 1.0, {1.0, 0.0}, x);
    CHECK(std::abs(nf.scattered) == 0.0);
    CHECK(std::abs(nf.total - std::exp(cplx(0.0, x.x()))) <= 1e-15);
}

TEST_CASE("solver far field matches the disk oracle") {
    auto p = solved_disk();
    const auto ff = far_field(p.sol.h, p.curve, p.grid, 1.0, {1.0, 0.0}, 360);
    const auto aref = disk_far_field(1.0, 1.0, {1.0, 0.0}, ff.angles, 16);
    const double scale = aref.cwiseAbs().maxCoeff();
    CHECK((ff.amplitudes - aref).cwiseAbs().maxCoeff() / scale <= 1e-6);
}

TEST_CASE("oracle density pushed through the quadrature reproduces the oracle far field") {
    // two independent routes to A: reflection coefficients vs the density
    // integral; closing to 1e-8 pins the far-field constant's phase
    const auto c = make_curve(CurveSpec::circle(1.0));
    const auto g = quadrature_grid(c, 256);
    const auto h = disk_density(1.0, 1.0, {1.0, 0.0}, 16, g);
    const auto ff = far_field(h, c, g, 1.0, {1.0, 0.0}, 90);
    const auto aref = disk_far_field(1.0, 1.0, {1.0, 0.0}, ff.angles, 16);
    CHECK((ff.amplitudes - aref).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("rotation equivariance of the disk far field") {
    auto p = solved_disk();
    const int L = 8;
    const int shift = 3;  // rotate by 2 pi * 3 / 8
    const double phi0 = kTwoPi * shift / L;
    const Eigen::Vector2d alpha_rot(std::cos(phi0), std::sin(phi0));

    const auto sys_curve = p.curve;
    const auto ops = assemble_operators(sys_curve, p.grid, 1.0);
    const auto sys = assemble_system(sys_curve, p.grid, ops, BasisFamily::WeightedTrig, 1.0,
                                     21, InnerKind::H1, alpha_rot);
    const auto sol_rot = solve_system(sys, p.grid);

    const auto ff = far_field(p.sol.h, p.curve, p.grid, 1.0, {1.0, 0.0}, L);
    const auto ff_rot = far_field(sol_rot.h, p.curve, p.grid, 1.0, alpha_rot, L);
    for (int l = 0; l < L; ++l) {
        CHECK(std::abs(ff_rot.amplitudes((l + shift) % L) - ff.amplitudes(l)) <= 1e-10);
    }
}

TEST_CASE("near field approaches the far-field asymptotics like 1/r") {
    auto p = solved_disk();
    const int L = 16;
    const auto ff = far_field(p.sol.h, p.curve, p.grid, 1.0, {1.0, 0.0}, L);
    double defect50 = 0.0, defect200 = 0.0;
    for (int l = 0; l < L; ++l) {
        const double phi = kTwoPi * l / L;
        for (double r : {50.0, 200.0}) {
            const Eigen::Vector2d x(r * std::cos(phi), r * std::sin(phi));
            const auto nf = near_field(p.sol.h, p.curve, p.grid, 1.0, {1.0, 0.0}, x);
            const cplx reduced = std::sqrt(r) * nf.scattered * std::exp(cplx(0.0, -r));
            const double d = std::abs(reduced - ff.amplitudes(l)) / std::abs(ff.amplitudes(l));
            (r == 50.0 ? defect50 : defect200) = std::max(r == 50.0 ? defect50 : defect200, d);
        }
    }
    CHECK(defect50 <= 2e-2);
    CHECK(defect200 <= 1e-2);
    // 1/r decay between the two radii (next correction is O(r^{-2}))
    CHECK(defect200 / defect50 >= 0.15);
    CHECK(defect200 / defect50 <= 0.35);
}

TEST_CASE("near field at x = (3, 0) matches the partial-wave series") {
    auto p = solved_disk();
    const auto nf = near_field(p.sol.h, p.curve, p.grid, 1.0, {1.0, 0.0}, {3.0, 0.0});
    const cplx ref = oracle::disk_total_field(
        1.0, 1.0, 0.0, 3.0, 0.0, 16,
        [](int m, double x) { return hankel1(m, x); },
        [](int m, double x) { return bessel_j(m, x); });
    CHECK(std::abs(nf.total - ref) <= 1e-8);
}

TEST_CASE("near-field guard rejects points hugging the boundary") {
    auto p = solved_disk();
    CHECK_THROWS_AS(
        near_field(p.sol.h, p.curve, p.grid, 1.0, {1.0, 0.0}, {1.001, 0.0}), DomainError);
}

TEST_CASE("boundary residual: solved, exact, and garbage densities") {
    auto p = solved_disk();
    CHECK(boundary_residual(p.sol.h, p.curve, p.grid, 1.0, {1.0, 0.0}, 64) <= 1e-6);

    const auto href = disk_density(1.0, 1.0, {1.0, 0.0}, 16, p.grid);
    CHECK(boundary_residual(href, p.curve, p.grid, 1.0, {1.0, 0.0}, 64) <= 1e-8);

    std::mt19937 rng(4);
    std::normal_distribution<double> nd(0.0, 1.0);
    Eigen::VectorXcd junk(p.grid.n);
    for (int i = 0; i < p.grid.n; ++i) junk(i) = cplx(nd(rng), nd(rng));
    CHECK(boundary_residual(junk, p.curve, p.grid, 1.0, {1.0, 0.0}, 64) >= 1e-3);
}

TEST_CASE("disk density: truncation is converged and symmetric") {
    const auto c = make_curve(CurveSpec::circle(1.0));
    const auto g = quadrature_grid(c, 128);
    const auto h12 = disk_density(1.0, 1.0, {1.0, 0.0}, 12, g);
    const auto h16 = disk_density(1.0, 1.0, {1.0, 0.0}, 16, g);
    CHECK((h12 - h16).cwiseAbs().maxCoeff() <= 1e-14);

    // insufficient truncation is reported
    CHECK_THROWS_AS(disk_density(1.0, 1.0, {1.0, 0.0}, 3, g), DomainError);

    // density is even in (theta - theta_alpha); alpha at 30 degrees
    const double a_deg = kTwoPi / 12.0;
    const Eigen::Vector2d alpha(std::cos(a_deg), std::sin(a_deg));
    const auto h = disk_density(1.0, 1.0, alpha, 14, g);
    // nodes symmetric around theta_alpha: theta_alpha ± 2 pi j / n
    // theta_alpha = 2 pi / 12 sits on the n=128 grid only approximately, so
    // compare interpolated symmetry through direct reevaluation instead
    const auto g2 = quadrature_grid(c, 96);  // 96 nodes: 2 pi/12 is node 8
    const auto hs = disk_density(1.0, 1.0, alpha, 14, g2);
    for (int d = 1; d < 40; ++d) {
        CHECK(std::abs(hs((8 + d) % 96) - hs(((8 - d) % 96 + 96) % 96)) <= 1e-12);
    }
}

TEST_CASE("oracle far field satisfies reciprocity") {
    const std::vector<double> angles = {0.3, 1.2, 2.8, 4.0, 5.5};
    const Eigen::Vector2d alpha(1.0, 0.0);
    const auto a1 = disk_far_field(1.0, 1.0, alpha, angles, 16);
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const Eigen::Vector2d alpha2(-std::cos(angles[i]), -std::sin(angles[i]));
        const auto a2 = disk_far_field(1.0, 1.0, alpha2, {oracle::kPi}, 16);
        CHECK(std::abs(a1(static_cast<int>(i)) - a2(0)) <= 1e-12);
    }
}

TEST_CASE("computed far fields satisfy reciprocity on the kite") {
    const auto curve = make_curve(CurveSpec::kite());
    const auto grid = quadrature_grid(curve, 256);
    const auto ops = assemble_operators(curve, grid, 1.0);

    const double obs = kTwoPi / 3.0;  // observation angle 120 degrees
    const auto solve_at = [&](const Eigen::Vector2d& alpha) {
        const auto sys = assemble_system(curve, grid, ops, BasisFamily::WeightedTrig, 1.0,
                                         65, InnerKind::H1, alpha);
        return solve_system(sys, grid);
    };

    const auto sol1 = solve_at({1.0, 0.0});
    const auto ff1 = far_field(sol1.h, curve, grid, 1.0, {1.0, 0.0}, 3);  // angle index 1 = 120 deg
    const Eigen::Vector2d alpha2(-std::cos(obs), -std::sin(obs));
    const auto sol2 = solve_at(alpha2);
    const auto ff2 = far_field(sol2.h, curve, grid, 1.0, alpha2, 2);  // angle index 1 = 180 deg

    CHECK(std::abs(ff1.amplitudes(1) - ff2.amplitudes(1)) <= 1e-6);
}

TEST_CASE("circle operator eigenvalues") {
    const cplx l0 = circle_operator_eigs(1.0, 0);
    CHECK(l0.real() == doctest::Approx(-0.10608219815307811).epsilon(1e-12));
    CHECK(l0.imag() == doctest::Approx(0.91974444547346407).epsilon(1e-12));
    const cplx l1 = circle_operator_eigs(1.0, 1);
    CHECK(l1.real() == doctest::Approx(0.53999761635765072).epsilon(1e-12));
    CHECK(l1.imag() == doctest::Approx(0.30417609760108052).epsilon(1e-12));

    // large-m law |lambda_m| -> 1/(2m), within 10% by m = 20
    for (int m : {20, 30, 40}) {
        const double scaled = 2.0 * m * std::abs(circle_operator_eigs(1.0, m));
        CHECK(std::abs(scaled - 1.0) <= 0.1);
    }
    CHECK_THROWS_AS(circle_operator_eigs(1.0, 41), DomainError);
}
