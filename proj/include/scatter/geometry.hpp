#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace scatter {

enum class CurveKind { Circle, Ellipse, Kite, StarCosine };

/// Parameters of a boundary curve.
///   Circle:     {R}
///   Ellipse:    {p, q}            x(t) = (p cos t, q sin t)
///   Kite:       {}                x(t) = (cos t + 0.65 cos 2t - 0.65, 1.5 sin t)
///   StarCosine: {R, eps, n}       r(t) = R (1 + eps cos(n t))
struct CurveSpec {
    CurveKind kind;
    std::vector<double> params;

    static CurveSpec circle(double R) { return {CurveKind::Circle, {R}}; }
    static CurveSpec ellipse(double p, double q) { return {CurveKind::Ellipse, {p, q}}; }
    static CurveSpec kite() { return {CurveKind::Kite, {}}; }
    static CurveSpec star(double R, double eps, int n) {
        return {CurveKind::StarCosine, {R, eps, static_cast<double>(n)}};
    }
};

/// Smooth 2pi-periodic boundary curve. Immutable after construction; the
/// diameter is computed once on a fine grid (max pairwise node distance,
/// n = 2048).
class BoundaryCurve {
public:
    explicit BoundaryCurve(CurveSpec spec);

    const CurveSpec& spec() const { return spec_; }

    Eigen::Vector2d point(double theta) const;
    Eigen::Vector2d tangent(double theta) const;
    Eigen::Vector2d outward_normal(double theta) const;

    /// a(theta) = |x'(theta)|; for radial curves sqrt(r'^2 + r^2).
    double arc_element(double theta) const;

    /// Polar distance |point(theta)| (argument of the radial basis families).
    double radius(double theta) const;

    /// The constant a = diam D.
    double diameter() const { return diameter_; }

    bool is_radial() const;

private:
    CurveSpec spec_;
    double diameter_;
};

BoundaryCurve make_curve(const CurveSpec& spec);
double curve_diameter(const BoundaryCurve& curve);

/// Uniform periodic quadrature grid theta_j = 2 pi j / n with cached arc
/// elements; trapezoid weight 2 pi / n.
struct Grid {
    int n = 0;
    double weight = 0.0;
    std::vector<double> nodes;
    std::vector<double> arc;
};

/// n must be even and >= 8.
Grid quadrature_grid(const BoundaryCurve& curve, int n);

}  // namespace scatter
