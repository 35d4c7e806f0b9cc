// Command-line harness: solve, verify-disk, condition-study, convergence-study.
// Exit codes: 0 success, 1 config error, 2 solver refusal, 3 verification failure.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include "scatter/config.hpp"
#include "scatter/errors.hpp"
#include "scatter/output.hpp"
#include "scatter/studies.hpp"
#include "scatter/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRefusal = 2;
constexpr int kExitVerification = 3;

std::filesystem::path resolve_outdir(const std::string& output_dir_flag,
                                     const scatter::RunConfig& cfg,
                                     const char* fallback) {
    if (!output_dir_flag.empty()) return output_dir_flag;
    if (!cfg.output_path.empty()) return cfg.output_path;
    return fallback;
}

int cmd_solve(const std::string& config_path, const std::string& outdir_flag) {
    const scatter::RunConfig cfg = scatter::load_config(config_path);
    const scatter::SolveOutcome out = scatter::run_solve(cfg);
    const auto outdir = resolve_outdir(outdir_flag, cfg, "out");
    scatter::write_solve_outputs(out, outdir);
    if (out.resonance_warning) {
        std::cerr << "warning: near interior resonance, sigma_min/sigma_max(T) = "
                  << scatter::fmt_float(out.resonance) << "\n";
    }
    std::cout << "solve: wrote " << (outdir / "summary.json").string()
              << " (residual_h1 " << scatter::fmt_float(out.solution.residual_h1)
              << ", boundary_residual " << scatter::fmt_float(out.boundary_res) << ")\n";
    return kExitOk;
}

int cmd_verify_disk(double R, double k, int J, int n, const std::string& outdir_flag) {
    nlohmann::json j;
    j["curve"] = {{"kind", "circle"}, {"R", R}};
    j["k"] = k;
    j["J"] = J;
    j["n"] = n;
    j["family"] = "weighted-trig";
    j["inner"] = "h1";
    const scatter::RunConfig cfg = scatter::parse_config(j);
    const scatter::DiskVerification v = scatter::run_verify_disk(cfg);

    if (v.resonance_warning) {
        std::cerr << "warning: near interior resonance, sigma_min/sigma_max(T) = "
                  << scatter::fmt_float(v.resonance) << "\n";
    }
    std::cout << "verify-disk R=" << R << " k=" << k << " J=" << J << " n=" << n << "\n"
              << "  density relative L2 error:   " << scatter::fmt_float(v.density_error) << "\n"
              << "  farfield relative Linf error: " << scatter::fmt_float(v.farfield_error)
              << "\n"
              << "  threshold: " << scatter::fmt_float(scatter::kVerifyDiskTolerance) << " -> "
              << (v.pass ? "PASS" : "FAIL") << "\n";
    (void)outdir_flag;
    return v.pass ? kExitOk : kExitVerification;
}

int cmd_condition_study(const std::string& config_path, const std::string& outdir_flag) {
    const scatter::RunConfig cfg = scatter::load_config(config_path);
    const auto rows = scatter::run_condition_study(cfg);
    const auto outdir = resolve_outdir(outdir_flag, cfg, "out");
    std::filesystem::create_directories(outdir);
    const auto path = std::filesystem::path(outdir) / "condition.csv";
    scatter::write_condition_csv(rows, path, cfg.hash_hex);
    std::cout << "condition-study: wrote " << path.string() << " (" << rows.size()
              << " rows)\n";
    return kExitOk;
}

int cmd_convergence_study(const std::string& config_path, const std::string& outdir_flag) {
    const scatter::RunConfig cfg = scatter::load_config(config_path);
    const auto rows = scatter::run_convergence_study(cfg);
    const auto outdir = resolve_outdir(outdir_flag, cfg, "out");
    std::filesystem::create_directories(outdir);
    const auto path = std::filesystem::path(outdir) / "convergence.csv";
    scatter::write_convergence_csv(rows, path, cfg.hash_hex);
    std::cout << "convergence-study: wrote " << path.string() << " (" << rows.size()
              << " rows)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D sound-soft scattering by a stabilized projection (T-matrix) method"};
    app.set_version_flag("--version",
                         std::string(scatter::kArtifactName) + " " + scatter::kArtifactVersion);
    app.require_subcommand(1);

    std::string output_dir;
    app.add_option("--output-dir", output_dir, "Directory for output files");

    std::string solve_config;
    auto* solve = app.add_subcommand("solve", "Solve one configuration, write density/farfield/summary");
    solve->add_option("config", solve_config, "JSON config file")->required();

    double vd_R = 1.0, vd_k = 1.0;
    int vd_J = 21, vd_n = 256;
    auto* vd = app.add_subcommand("verify-disk", "Compare the solver against the disk oracle");
    vd->add_option("--R", vd_R, "Disk radius");
    vd->add_option("--k", vd_k, "Wavenumber");
    vd->add_option("--J", vd_J, "Trial-space size");
    vd->add_option("--n", vd_n, "Grid size");

    std::string cond_config;
    auto* cond = app.add_subcommand("condition-study", "Condition-number grid -> condition.csv");
    cond->add_option("config", cond_config, "JSON config file")->required();

    std::string conv_config;
    auto* conv = app.add_subcommand("convergence-study", "Convergence table -> convergence.csv");
    conv->add_option("config", conv_config, "JSON config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_config, output_dir);
        if (vd->parsed()) return cmd_verify_disk(vd_R, vd_k, vd_J, vd_n, output_dir);
        if (cond->parsed()) return cmd_condition_study(cond_config, output_dir);
        if (conv->parsed()) return cmd_convergence_study(conv_config, output_dir);
    } catch (const scatter::SolverRefusal& e) {
        std::cerr << "solver refusal: " << e.what() << "\n";
        std::fprintf(stderr, "estimate: %.6f\n", e.estimate());
        return kExitRefusal;
    } catch (const scatter::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
