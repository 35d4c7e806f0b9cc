#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "scatter/basis.hpp"
#include "scatter/geometry.hpp"

namespace scatter {

struct LabeledCurve {
    CurveSpec spec;
    std::string label;
};

enum class SolverKind { Galerkin, Iteration };

/// Parsed run configuration. Study commands accept lists for curve, family,
/// inner and J; plain solve requires each to be a singleton.
struct RunConfig {
    std::vector<LabeledCurve> curves;
    std::vector<BasisFamily> families;
    std::vector<InnerKind> inners;
    std::vector<int> Js;
    double k = 1.0;
    double alpha_degrees = 0.0;
    int n = 256;
    SolverKind solver = SolverKind::Galerkin;
    double tol = 1e-10;
    int max_iter = 500;
    std::string output_path;
    std::string hash_hex;  // FNV-1a of the canonical form

    const LabeledCurve& single_curve() const;
    BasisFamily single_family() const;
    InnerKind single_inner() const;
    int single_J() const;
    Eigen::Vector2d alpha() const;
};

std::string curve_label(const CurveSpec& spec);

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

std::uint64_t fnv1a64(const std::string& data);

}  // namespace scatter
