#include "scatter/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "scatter/errors.hpp"

namespace scatter {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kDiameterGrid = 2048;

void validate(const CurveSpec& spec) {
    switch (spec.kind) {
        case CurveKind::Circle:
            if (spec.params.size() != 1) throw DomainError("circle needs one parameter R");
            if (!(spec.params[0] > 0)) throw DomainError("circle radius must be positive");
            break;
        case CurveKind::Ellipse:
            if (spec.params.size() != 2) throw DomainError("ellipse needs parameters p, q");
            if (!(spec.params[0] > 0) || !(spec.params[1] > 0)) {
                throw DomainError("ellipse semi-axes must be positive");
            }
            break;
        case CurveKind::Kite:
            if (!spec.params.empty()) throw DomainError("kite takes no parameters");
            break;
        case CurveKind::StarCosine: {
            if (spec.params.size() != 3) throw DomainError("star needs parameters R, eps, n");
            const double R = spec.params[0];
            const double eps = spec.params[1];
            const double n = spec.params[2];
            if (!(R > 0)) throw DomainError("star radius must be positive");
            // eps close to 1 gives a near-self-intersecting boundary; reject early.
            if (!(std::abs(eps) < 0.95)) {
                throw DomainError("star eps must satisfy |eps| < 0.95");
            }
            if (n < 1 || n != std::floor(n)) throw DomainError("star n must be a positive integer");
            break;
        }
    }
}

}  // namespace

BoundaryCurve::BoundaryCurve(CurveSpec spec) : spec_(std::move(spec)), diameter_(0.0) {
    validate(spec_);
    std::vector<Eigen::Vector2d> pts(kDiameterGrid);
    for (int i = 0; i < kDiameterGrid; ++i) {
        pts[i] = point(kTwoPi * i / kDiameterGrid);
    }
    double best = 0.0;
    for (int i = 0; i < kDiameterGrid; ++i) {
        for (int j = i + 1; j < kDiameterGrid; ++j) {
            best = std::max(best, (pts[i] - pts[j]).squaredNorm());
        }
    }
    diameter_ = std::sqrt(best);
}

Eigen::Vector2d BoundaryCurve::point(double t) const {
    switch (spec_.kind) {
        case CurveKind::Circle: {
            const double R = spec_.params[0];
            return {R * std::cos(t), R * std::sin(t)};
        }
        case CurveKind::Ellipse:
            return {spec_.params[0] * std::cos(t), spec_.params[1] * std::sin(t)};
        case CurveKind::Kite:
            return {std::cos(t) + 0.65 * std::cos(2 * t) - 0.65, 1.5 * std::sin(t)};
        case CurveKind::StarCosine: {
            const double r = spec_.params[0] * (1.0 + spec_.params[1] * std::cos(spec_.params[2] * t));
            return {r * std::cos(t), r * std::sin(t)};
        }
    }
    return {0, 0};
}

Eigen::Vector2d BoundaryCurve::tangent(double t) const {
    switch (spec_.kind) {
        case CurveKind::Circle: {
            const double R = spec_.params[0];
            return {-R * std::sin(t), R * std::cos(t)};
        }
        case CurveKind::Ellipse:
            return {-spec_.params[0] * std::sin(t), spec_.params[1] * std::cos(t)};
        case CurveKind::Kite:
            return {-std::sin(t) - 1.3 * std::sin(2 * t), 1.5 * std::cos(t)};
        case CurveKind::StarCosine: {
            const double R = spec_.params[0];
            const double eps = spec_.params[1];
            const double nl = spec_.params[2];
            const double r = R * (1.0 + eps * std::cos(nl * t));
            const double rp = -R * eps * nl * std::sin(nl * t);
            return {rp * std::cos(t) - r * std::sin(t), rp * std::sin(t) + r * std::cos(t)};
        }
    }
    return {0, 0};
}

Eigen::Vector2d BoundaryCurve::outward_normal(double t) const {
    // counterclockwise parameterization: outward normal = (y', -x')/|x'|
    const Eigen::Vector2d tg = tangent(t);
    const double len = tg.norm();
    return {tg.y() / len, -tg.x() / len};
}

double BoundaryCurve::arc_element(double t) const { return tangent(t).norm(); }

double BoundaryCurve::radius(double t) const { return point(t).norm(); }

bool BoundaryCurve::is_radial() const {
    return spec_.kind == CurveKind::Circle || spec_.kind == CurveKind::StarCosine;
}

BoundaryCurve make_curve(const CurveSpec& spec) { return BoundaryCurve(spec); }

double curve_diameter(const BoundaryCurve& curve) { return curve.diameter(); }

Grid quadrature_grid(const BoundaryCurve& curve, int n) {
    if (n < 8 || n % 2 != 0) {
        throw DomainError("grid size must be even and >= 8, got n=" + std::to_string(n));
    }
    Grid g;
    g.n = n;
    g.weight = kTwoPi / n;
    g.nodes.resize(n);
    g.arc.resize(n);
    for (int j = 0; j < n; ++j) {
        g.nodes[j] = kTwoPi * j / n;
        g.arc[j] = curve.arc_element(g.nodes[j]);
    }
    return g;
}

}  // namespace scatter
