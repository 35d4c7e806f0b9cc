#pragma once

#include <complex>
#include <vector>

namespace scatter {

/// Supported envelope for the Bessel routines. Arguments outside are rejected
/// with DomainError; |Y_m| past 1e300 is reported as OverflowError so callers
/// (the condition study) can treat it as an infinite condition number.
inline constexpr int kBesselMaxOrder = 60;
inline constexpr double kBesselMinArg = 1e-8;
inline constexpr double kBesselMaxArg = 100.0;
inline constexpr double kBesselOverflowLimit = 1e300;

inline constexpr double kEulerGamma = 0.57721566490153286;

/// J_m(x). Power series for small x, Miller backward recurrence otherwise.
double bessel_j(int m, double x);

/// Y_m(x). Y_0, Y_1 from Neumann series over the J array, then forward
/// recurrence (stable for Y).
double bessel_y(int m, double x);

/// H_m^{(1)}(x) = J_m(x) + i Y_m(x).
std::complex<double> hankel1(int m, double x);

/// J'_m = (J_{m-1} - J_{m+1})/2, J'_0 = -J_1; Y analogously.
double bessel_j_deriv(int m, double x);
double bessel_y_deriv(int m, double x);

struct BesselEval {
    int order;
    double argument;
    double j;
    double y;
    double jprime;
    double yprime;
};

/// All four values at once (shares the backward-recurrence pass).
BesselEval bessel_eval(int m, double x);

/// J_0..J_mmax and Y_0..Y_mmax in one pass.
void bessel_jy(int mmax, double x, std::vector<double>& j_out, std::vector<double>& y_out);

/// (J_0(x), Y_0(x)) — the kernel hot path.
std::pair<double, double> bessel_j0y0(double x);

}  // namespace scatter
