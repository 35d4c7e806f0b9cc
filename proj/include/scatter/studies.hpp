#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scatter/config.hpp"
#include "scatter/fields.hpp"
#include "scatter/galerkin.hpp"
#include "scatter/iterative.hpp"

namespace scatter {

/// Everything cmd_solve reports.
struct SolveOutcome {
    RunConfig cfg;
    DensitySolution solution;
    FarFieldPattern farfield;
    double boundary_res = 0.0;
    double cond = 0.0;
    RieszBounds riesz;
    double resonance = 1.0;
    bool resonance_warning = false;
    double wall_ms = 0.0;
    // iteration metadata (solver == Iteration only)
    std::optional<double> anorm_estimate;
    std::optional<int> iterations;
    // grid kept for downstream evaluations
    Grid grid;
};

SolveOutcome run_solve(const RunConfig& cfg);

/// density.csv, farfield.csv and summary.json under outdir.
void write_solve_outputs(const SolveOutcome& out, const std::filesystem::path& outdir);

struct DiskVerification {
    double density_error = 0.0;
    double farfield_error = 0.0;
    double resonance = 1.0;
    bool resonance_warning = false;
    bool pass = false;
    double wall_ms = 0.0;
};

/// Galerkin solve on a circle compared against the separation-of-variables
/// oracle; pass iff both errors <= 1e-6.
DiskVerification run_verify_disk(const RunConfig& cfg);
inline constexpr double kVerifyDiskTolerance = 1e-6;

struct ConditionRow {
    std::string family;
    std::string inner;
    std::string curve;
    int J = 0;
    double cond = 0.0;
    double sigma_max = 0.0;
    double sigma_min = 0.0;
    bool overflow = false;
};

/// Cross product of (family, inner, curve, J); rows sorted by
/// (family, inner, curve, J). Hankel overflow comes back as a flagged row
/// with an infinite condition number.
std::vector<ConditionRow> run_condition_study(const RunConfig& cfg);
void write_condition_csv(const std::vector<ConditionRow>& rows,
                         const std::filesystem::path& path, const std::string& config_hash);

struct ConvergenceRow {
    int J = 0;
    double density_error = 0.0;
    double farfield_error = 0.0;
    double residual_h1 = 0.0;
    double boundary_residual = 0.0;
};

/// Errors vs the disk oracle on circles; self-convergence against
/// J_ref = 2 max(J) + 1 otherwise.
std::vector<ConvergenceRow> run_convergence_study(const RunConfig& cfg);
void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::filesystem::path& path, const std::string& config_hash);

/// Default number of modes for the disk oracle at a given kR (tail below
/// 1e-14 of the head).
int disk_oracle_modes(double R, double k);

/// Relative L2 distance between two grid functions in the H0 norm.
double relative_l2(const Eigen::VectorXcd& u, const Eigen::VectorXcd& ref, const Grid& grid);

}  // namespace scatter
