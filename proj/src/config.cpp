#include "scatter/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "scatter/errors.hpp"

namespace scatter {

using nlohmann::json;

namespace {

std::string short_num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

double require_number(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number()) {
        throw ConfigError("config field '" + field + "' must be a number");
    }
    return j[field].get<double>();
}

CurveSpec parse_curve(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ConfigError(where + ": curve must be an object with a string 'kind'");
    }
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "circle") return CurveSpec::circle(require_number(j, "R"));
        if (kind == "ellipse") {
            return CurveSpec::ellipse(require_number(j, "p"), require_number(j, "q"));
        }
        if (kind == "kite") return CurveSpec::kite();
        if (kind == "star") {
            const double n = require_number(j, "n");
            if (n < 1 || n != std::floor(n)) {
                throw ConfigError(where + ".n: star n must be a positive integer");
            }
            return CurveSpec::star(require_number(j, "R"), require_number(j, "eps"),
                                   static_cast<int>(n));
        }
    } catch (const DomainError& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + ".kind: unknown curve kind '" + kind + "'");
}

}  // namespace

std::string curve_label(const CurveSpec& spec) {
    switch (spec.kind) {
        case CurveKind::Circle: return "circle(R=" + short_num(spec.params[0]) + ")";
        case CurveKind::Ellipse:
            return "ellipse(" + short_num(spec.params[0]) + "," + short_num(spec.params[1]) + ")";
        case CurveKind::Kite: return "kite";
        case CurveKind::StarCosine:
            return "star(R=" + short_num(spec.params[0]) + ",eps=" + short_num(spec.params[1]) +
                   ",n=" + short_num(spec.params[2]) + ")";
    }
    return {};
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    RunConfig cfg;

    if (j.contains("curves")) {
        if (!j["curves"].is_array() || j["curves"].empty()) {
            throw ConfigError("'curves' must be a non-empty array");
        }
        int idx = 0;
        for (const auto& c : j["curves"]) {
            const CurveSpec spec = parse_curve(c, "curves[" + std::to_string(idx) + "]");
            std::string label = c.contains("label") ? c["label"].get<std::string>()
                                                    : curve_label(spec);
            cfg.curves.push_back({spec, std::move(label)});
            ++idx;
        }
    } else if (j.contains("curve")) {
        const CurveSpec spec = parse_curve(j["curve"], "curve");
        cfg.curves.push_back({spec, curve_label(spec)});
    } else {
        throw ConfigError("config needs a 'curve' or 'curves' field");
    }

    auto parse_names = [&](const char* plural, const char* singular, auto parser, auto& out,
                           auto fallback) {
        if (j.contains(plural)) {
            if (!j[plural].is_array() || j[plural].empty()) {
                throw ConfigError(std::string("'") + plural + "' must be a non-empty array");
            }
            for (const auto& v : j[plural]) out.push_back(parser(v.template get<std::string>()));
        } else if (j.contains(singular)) {
            out.push_back(parser(j[singular].template get<std::string>()));
        } else {
            out.push_back(fallback);
        }
    };
    parse_names("families", "family", [](const std::string& s) { return parse_family(s); },
                cfg.families, BasisFamily::WeightedTrig);
    parse_names("inners", "inner", [](const std::string& s) { return parse_inner(s); },
                cfg.inners, InnerKind::H1);

    if (j.contains("J")) {
        if (j["J"].is_array()) {
            for (const auto& v : j["J"]) cfg.Js.push_back(v.get<int>());
        } else if (j["J"].is_number_integer()) {
            cfg.Js.push_back(j["J"].get<int>());
        } else {
            throw ConfigError("'J' must be an integer or an array of integers");
        }
    } else {
        cfg.Js.push_back(21);
    }

    if (j.contains("k")) cfg.k = require_number(j, "k");
    if (j.contains("alpha_degrees")) cfg.alpha_degrees = require_number(j, "alpha_degrees");
    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) throw ConfigError("'n' must be an integer");
        cfg.n = j["n"].get<int>();
    }
    if (j.contains("solver")) {
        const std::string s = j["solver"].get<std::string>();
        if (s == "galerkin") cfg.solver = SolverKind::Galerkin;
        else if (s == "iteration") cfg.solver = SolverKind::Iteration;
        else throw ConfigError("'solver' must be \"galerkin\" or \"iteration\"");
    }
    if (j.contains("tol")) cfg.tol = require_number(j, "tol");
    if (j.contains("max_iter")) {
        if (!j["max_iter"].is_number_integer()) throw ConfigError("'max_iter' must be an integer");
        cfg.max_iter = j["max_iter"].get<int>();
    }
    if (j.contains("output_path")) cfg.output_path = j["output_path"].get<std::string>();

    // parse-time guards
    if (cfg.n < 8 || cfg.n % 2 != 0) {
        throw ConfigError("'n' must be even and >= 8, got " + std::to_string(cfg.n));
    }
    for (int J : cfg.Js) {
        if (J < 1 || J > cfg.n / 2 - 1) {
            throw ConfigError("'J' must satisfy 1 <= J <= n/2-1 = " +
                              std::to_string(cfg.n / 2 - 1) + ", got " + std::to_string(J));
        }
    }
    if (!(cfg.k > 0)) throw ConfigError("'k' must be positive");
    if (!(cfg.tol > 0)) throw ConfigError("'tol' must be positive");
    if (cfg.max_iter < 1) throw ConfigError("'max_iter' must be >= 1");

    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(j.dump())));
    cfg.hash_hex = buf;
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

const LabeledCurve& RunConfig::single_curve() const {
    if (curves.size() != 1) throw ConfigError("this command needs exactly one curve");
    return curves.front();
}

BasisFamily RunConfig::single_family() const {
    if (families.size() != 1) throw ConfigError("this command needs exactly one family");
    return families.front();
}

InnerKind RunConfig::single_inner() const {
    if (inners.size() != 1) throw ConfigError("this command needs exactly one inner product");
    return inners.front();
}

int RunConfig::single_J() const {
    if (Js.size() != 1) throw ConfigError("this command needs exactly one J");
    return Js.front();
}

Eigen::Vector2d RunConfig::alpha() const {
    const double rad = alpha_degrees * std::numbers::pi / 180.0;
    return {std::cos(rad), std::sin(rad)};
}

}  // namespace scatter
