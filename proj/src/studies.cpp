#include "scatter/studies.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include <json.hpp>

#include "scatter/errors.hpp"
#include "scatter/output.hpp"
#include "scatter/specfun.hpp"
#include "scatter/version.hpp"

namespace scatter {

using nlohmann::json;

namespace {

constexpr int kFarFieldDirections = 360;
constexpr int kBoundaryTestPoints = 64;

double wall_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

json num_or_marker(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace

double relative_l2(const Eigen::VectorXcd& u, const Eigen::VectorXcd& ref, const Grid& grid) {
    const Eigen::VectorXcd d = u - ref;
    const double num = std::abs(inner_h0(d, d, grid).real());
    const double den = std::abs(inner_h0(ref, ref, grid).real());
    return std::sqrt(num / den);
}

int disk_oracle_modes(double R, double k) {
    // first M with |H_0(kR)| / |H_{M+1}(kR)| below 1e-14, capped by envelope
    std::vector<double> jv, yv;
    for (int M = 8; M + 1 <= kBesselMaxOrder; M += 2) {
        bessel_jy(M + 1, k * R, jv, yv);
        const double head = std::abs(std::complex<double>(jv[0], yv[0]));
        const double tail = std::abs(std::complex<double>(jv[M + 1], yv[M + 1]));
        if (head / tail <= 1e-14) return M;
    }
    return kBesselMaxOrder - 1;
}

SolveOutcome run_solve(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();

    SolveOutcome out;
    out.cfg = cfg;
    const LabeledCurve& lc = cfg.single_curve();
    const BasisFamily family = cfg.single_family();
    const InnerKind inner = cfg.single_inner();
    const int J = cfg.single_J();

    const BoundaryCurve curve = make_curve(lc.spec);
    out.grid = quadrature_grid(curve, cfg.n);
    const OperatorMatrices ops = assemble_operators(curve, out.grid, cfg.k);

    out.resonance = resonance_ratio(ops.T);
    out.resonance_warning = out.resonance < kResonanceThreshold;

    const Eigen::Vector2d alpha = cfg.alpha();

    if (cfg.solver == SolverKind::Iteration) {
        IterationState st;
        NeumannOptions opts{cfg.tol, cfg.max_iter};
        out.solution = iteration_solve(curve, out.grid, ops, cfg.k, alpha, opts, &st);
        out.anorm_estimate = st.estimated_norm;
        out.iterations = st.iteration_count;
        const GalerkinSystem sys =
            assemble_system(curve, out.grid, ops, family, cfg.k, J, inner, alpha);
        out.cond = condition_number(sys.a);
    } else {
        const GalerkinSystem sys =
            assemble_system(curve, out.grid, ops, family, cfg.k, J, inner, alpha);
        out.solution = solve_system(sys, out.grid);
        out.cond = condition_number(sys.a);
    }

    out.farfield = far_field(out.solution.h, curve, out.grid, cfg.k, alpha, kFarFieldDirections);
    out.boundary_res =
        boundary_residual(out.solution.h, curve, out.grid, cfg.k, alpha, kBoundaryTestPoints);
    out.riesz = estimate_riesz_bounds(family, curve, cfg.k, J, out.grid);

    out.wall_ms = wall_since(t0);
    return out;
}

void write_solve_outputs(const SolveOutcome& out, const std::filesystem::path& outdir) {
    std::filesystem::create_directories(outdir);

    CsvWriter density(outdir / "density.csv", {"theta", "re_h", "im_h"}, out.cfg.hash_hex);
    for (int i = 0; i < out.grid.n; ++i) {
        density.row({fmt_float(out.grid.nodes[i]), fmt_float(out.solution.h(i).real()),
                     fmt_float(out.solution.h(i).imag())});
    }
    density.close();

    CsvWriter ff(outdir / "farfield.csv", {"angle_radians", "re_A", "im_A", "abs_A"},
                 out.cfg.hash_hex);
    for (std::size_t l = 0; l < out.farfield.angles.size(); ++l) {
        const auto a = out.farfield.amplitudes(static_cast<int>(l));
        ff.row({fmt_float(out.farfield.angles[l]), fmt_float(a.real()), fmt_float(a.imag()),
                fmt_float(std::abs(a))});
    }
    ff.close();

    json summary;
    summary["artifact"] = std::string(kArtifactName) + "-" + kArtifactVersion;
    summary["config_hash"] = out.cfg.hash_hex;
    summary["curve"] = out.cfg.single_curve().label;
    summary["family"] = family_name(out.cfg.single_family());
    summary["inner"] = inner_name(out.cfg.single_inner());
    summary["J"] = out.cfg.single_J();
    summary["n"] = out.cfg.n;
    summary["k"] = out.cfg.k;
    summary["alpha_degrees"] = out.cfg.alpha_degrees;
    summary["solver"] = out.cfg.solver == SolverKind::Iteration ? "iteration" : "galerkin";
    summary["method"] =
        out.solution.method == DensitySolution::Method::Iteration ? "iteration" : "galerkin";
    summary["residual_h1"] = num_or_marker(out.solution.residual_h1);
    summary["boundary_residual"] = num_or_marker(out.boundary_res);
    summary["condition_number"] = num_or_marker(out.cond);
    summary["riesz_lower"] = num_or_marker(out.riesz.lower);
    summary["riesz_upper"] = num_or_marker(out.riesz.upper);
    summary["resonance_ratio"] = num_or_marker(out.resonance);
    summary["resonance_warning"] = out.resonance_warning;
    if (out.anorm_estimate) summary["anorm_estimate"] = num_or_marker(*out.anorm_estimate);
    if (out.iterations) summary["iterations"] = *out.iterations;
    summary["wall_time_ms"] = out.wall_ms;

    std::ofstream js(outdir / "summary.json", std::ios::binary);
    js << summary.dump(2) << "\n";
}

DiskVerification run_verify_disk(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const LabeledCurve& lc = cfg.single_curve();
    if (lc.spec.kind != CurveKind::Circle) {
        throw ConfigError("verify-disk requires a circle curve");
    }
    const double R = lc.spec.params[0];

    SolveOutcome out = run_solve(cfg);

    const int M = disk_oracle_modes(R, cfg.k);
    const Eigen::VectorXcd href = disk_density(R, cfg.k, cfg.alpha(), M, out.grid);
    const Eigen::VectorXcd aref =
        disk_far_field(R, cfg.k, cfg.alpha(), out.farfield.angles, M);

    DiskVerification v;
    v.density_error = relative_l2(out.solution.h, href, out.grid);
    const double scale = aref.cwiseAbs().maxCoeff();
    v.farfield_error = (out.farfield.amplitudes - aref).cwiseAbs().maxCoeff() / scale;
    v.resonance = out.resonance;
    v.resonance_warning = out.resonance_warning;
    v.pass = v.density_error <= kVerifyDiskTolerance && v.farfield_error <= kVerifyDiskTolerance;
    v.wall_ms = wall_since(t0);
    return v;
}

std::vector<ConditionRow> run_condition_study(const RunConfig& cfg) {
    std::vector<ConditionRow> rows;

    for (const LabeledCurve& lc : cfg.curves) {
        const BoundaryCurve curve = make_curve(lc.spec);
        const Grid grid = quadrature_grid(curve, cfg.n);
        const OperatorMatrices ops = assemble_operators(curve, grid, cfg.k);
        const Eigen::Vector2d alpha = cfg.alpha();

        for (BasisFamily family : cfg.families) {
            for (InnerKind inner : cfg.inners) {
                for (int J : cfg.Js) {
                    ConditionRow row;
                    row.family = family_name(family);
                    row.inner = inner_name(inner);
                    row.curve = lc.label;
                    row.J = J;
                    try {
                        const GalerkinSystem sys =
                            assemble_system(curve, grid, ops, family, cfg.k, J, inner, alpha);
                        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys.a);
                        const auto& sv = svd.singularValues();
                        row.sigma_max = sv(0);
                        row.sigma_min = sv(sv.size() - 1);
                        row.cond = (row.sigma_min == 0.0 || !std::isfinite(row.sigma_max))
                                       ? std::numeric_limits<double>::infinity()
                                       : row.sigma_max / row.sigma_min;
                    } catch (const OverflowError&) {
                        row.overflow = true;
                        row.cond = std::numeric_limits<double>::infinity();
                        row.sigma_max = std::numeric_limits<double>::quiet_NaN();
                        row.sigma_min = std::numeric_limits<double>::quiet_NaN();
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }

    std::sort(rows.begin(), rows.end(), [](const ConditionRow& a, const ConditionRow& b) {
        return std::tie(a.family, a.inner, a.curve, a.J) <
               std::tie(b.family, b.inner, b.curve, b.J);
    });
    return rows;
}

void write_condition_csv(const std::vector<ConditionRow>& rows,
                         const std::filesystem::path& path, const std::string& config_hash) {
    CsvWriter csv(path, {"family", "inner", "curve", "J", "cond", "sigma_max", "sigma_min",
                         "overflow"},
                  config_hash);
    for (const auto& r : rows) {
        csv.row({r.family, r.inner, r.curve, std::to_string(r.J), fmt_float(r.cond),
                 fmt_float(r.sigma_max), fmt_float(r.sigma_min), r.overflow ? "1" : "0"});
    }
    csv.close();
}

std::vector<ConvergenceRow> run_convergence_study(const RunConfig& cfg) {
    const LabeledCurve& lc = cfg.single_curve();
    const BasisFamily family = cfg.single_family();
    const InnerKind inner = cfg.single_inner();

    const BoundaryCurve curve = make_curve(lc.spec);
    const Grid grid = quadrature_grid(curve, cfg.n);
    const OperatorMatrices ops = assemble_operators(curve, grid, cfg.k);
    const Eigen::Vector2d alpha = cfg.alpha();

    std::vector<double> angles(kFarFieldDirections);
    for (int l = 0; l < kFarFieldDirections; ++l) {
        angles[l] = 2.0 * std::numbers::pi * l / kFarFieldDirections;
    }

    // reference: separation-of-variables oracle on circles, otherwise
    // self-convergence against a finer trial space
    Eigen::VectorXcd href;
    Eigen::VectorXcd aref;
    if (lc.spec.kind == CurveKind::Circle) {
        const double R = lc.spec.params[0];
        const int M = disk_oracle_modes(R, cfg.k);
        href = disk_density(R, cfg.k, alpha, M, grid);
        aref = disk_far_field(R, cfg.k, alpha, angles, M);
    } else {
        const int jmax = *std::max_element(cfg.Js.begin(), cfg.Js.end());
        const int jref = 2 * jmax + 1;
        if (jref > cfg.n / 2 - 1) {
            throw ConfigError("self-convergence reference J_ref=" + std::to_string(jref) +
                              " violates the resolution guard; increase n");
        }
        const GalerkinSystem sys =
            assemble_system(curve, grid, ops, family, cfg.k, jref, inner, alpha);
        const DensitySolution ref = solve_system(sys, grid);
        href = ref.h;
        aref = far_field(ref.h, curve, grid, cfg.k, alpha, kFarFieldDirections).amplitudes;
    }
    const double ff_scale = aref.cwiseAbs().maxCoeff();

    std::vector<ConvergenceRow> rows;
    for (int J : cfg.Js) {
        const GalerkinSystem sys =
            assemble_system(curve, grid, ops, family, cfg.k, J, inner, alpha);
        const DensitySolution sol = solve_system(sys, grid);

        ConvergenceRow row;
        row.J = J;
        row.residual_h1 = sol.residual_h1;
        row.density_error = relative_l2(sol.h, href, grid);
        const Eigen::VectorXcd a =
            far_field(sol.h, curve, grid, cfg.k, alpha, kFarFieldDirections).amplitudes;
        row.farfield_error = (a - aref).cwiseAbs().maxCoeff() / ff_scale;
        row.boundary_residual =
            boundary_residual(sol.h, curve, grid, cfg.k, alpha, kBoundaryTestPoints);
        rows.push_back(row);
    }
    return rows;
}

void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::filesystem::path& path, const std::string& config_hash) {
    CsvWriter csv(path, {"J", "density_error", "farfield_error", "residual_h1",
                         "boundary_residual"},
                  config_hash);
    for (const auto& r : rows) {
        csv.row({std::to_string(r.J), fmt_float(r.density_error), fmt_float(r.farfield_error),
                 fmt_float(r.residual_h1), fmt_float(r.boundary_residual)});
    }
    csv.close();
}

}  // namespace scatter
