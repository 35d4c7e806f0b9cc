#include "scatter/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "scatter/errors.hpp"

namespace scatter {

namespace {

void check_envelope(int m, double x) {
    if (m < 0 || m > kBesselMaxOrder) {
        throw DomainError("bessel order out of envelope [0, 60]: m=" + std::to_string(m));
    }
    if (!(x >= kBesselMinArg) || !(x <= kBesselMaxArg)) {
        throw DomainError("bessel argument out of envelope [1e-8, 100]: x=" + std::to_string(x));
    }
}

// Number of J orders needed so the Neumann series for Y_0 is converged to
// below double rounding. Generous: the backward pass is cheap.
int y_series_length(double x) {
    return static_cast<int>(std::ceil(x)) + 20 + static_cast<int>(std::ceil(7.0 * std::pow(x, 0.6)));
}

// J_0..J_mmax by Miller's backward recurrence with the normalization
// J_0 + 2 J_2 + 2 J_4 + ... = 1. Valid for any x in the envelope; entries
// that underflow come out as zero.
std::vector<double> miller_j_array(int mmax, double x) {
    const int base = std::max(mmax, static_cast<int>(std::ceil(x)));
    const int start = base + 40 + static_cast<int>(std::ceil(2.0 * std::sqrt(40.0 * (base + 2.0))));

    std::vector<double> j(mmax + 1, 0.0);
    double fkp1 = 0.0;        // f_{k+1}
    double fk = 1e-280;       // f_k, seeded tiny at k = start
    double norm = 0.0;        // accumulates f_0 + 2 sum_{even k >= 2} f_k
    if (start <= mmax) j[start] = fk;
    if (start % 2 == 0 && start >= 2) norm += 2.0 * fk;

    for (int k = start; k >= 1; --k) {
        double fkm1 = (2.0 * k / x) * fk - fkp1;
        fkp1 = fk;
        fk = fkm1;
        const int idx = k - 1;
        if (idx <= mmax) j[idx] = fk;
        if (idx >= 2 && idx % 2 == 0) norm += 2.0 * fk;

        if (std::abs(fk) > 1e250) {
            const double scale = 1e-250;
            fk *= scale;
            fkp1 *= scale;
            norm *= scale;
            for (double& v : j) v *= scale;
        }
    }
    norm += fk;  // f_0

    for (double& v : j) v /= norm;
    return j;
}

struct JYPair {
    std::vector<double> j;  // J_0..J_len
    double y0;
    double y1;
};

// Y_0 and Y_1 from the Neumann expansions
//   Y_0 = (2/pi) [ (ln(x/2)+gamma) J_0 - 2 sum_k (-1)^k J_{2k}/k ]
//   Y_1 = -Y_0'
//       = -(2/pi) [ J_0/x - (ln(x/2)+gamma) J_1 - sum_k (-1)^k (J_{2k-1}-J_{2k+1})/k ]
// which are uniformly accurate over the whole envelope given the J array.
JYPair jy_base(int mmax, double x) {
    const int len = std::max(mmax, y_series_length(x)) + 1;
    JYPair out;
    out.j = miller_j_array(len, x);

    const double lg = std::log(0.5 * x) + kEulerGamma;
    double s0 = 0.0;  // sum (-1)^k J_{2k}/k
    double s1 = 0.0;  // sum (-1)^k (J_{2k-1}-J_{2k+1})/k
    double sign = -1.0;
    for (int k = 1; 2 * k + 1 <= len; ++k) {
        s0 += sign * out.j[2 * k] / k;
        s1 += sign * (out.j[2 * k - 1] - out.j[2 * k + 1]) / k;
        sign = -sign;
    }
    const double two_over_pi = 2.0 / std::numbers::pi;
    out.y0 = two_over_pi * (lg * out.j[0] - 2.0 * s0);
    out.y1 = -two_over_pi * (out.j[0] / x - lg * out.j[1] - s1);
    return out;
}

void check_y_overflow(double y, int m, double x) {
    if (std::abs(y) > kBesselOverflowLimit || std::isinf(y)) {
        throw OverflowError("Y_" + std::to_string(m) + "(" + std::to_string(x) +
                            ") exceeds 1e300");
    }
}

// Y_0..Y_mmax by forward recurrence from the series values.
std::vector<double> y_array(int mmax, double x, const JYPair& base) {
    std::vector<double> y(mmax + 1);
    y[0] = base.y0;
    if (mmax >= 1) y[1] = base.y1;
    for (int m = 1; m < mmax; ++m) {
        y[m + 1] = (2.0 * m / x) * y[m] - y[m - 1];
        check_y_overflow(y[m + 1], m + 1, x);
    }
    return y;
}

}  // namespace

double bessel_j(int m, double x) {
    check_envelope(m, x);
    return miller_j_array(m, x)[m];
}

double bessel_y(int m, double x) {
    check_envelope(m, x);
    const JYPair base = jy_base(m, x);
    if (m == 0) return base.y0;
    return y_array(m, x, base)[m];
}

std::complex<double> hankel1(int m, double x) {
    check_envelope(m, x);
    const JYPair base = jy_base(m, x);
    const double j = base.j[m];
    const double y = (m == 0) ? base.y0 : y_array(m, x, base)[m];
    return {j, y};
}

double bessel_j_deriv(int m, double x) {
    check_envelope(m, x);
    if (m == 0) return -bessel_j(1, x);
    const auto j = miller_j_array(m + 1, x);
    return 0.5 * (j[m - 1] - j[m + 1]);
}

double bessel_y_deriv(int m, double x) {
    check_envelope(m, x);
    const JYPair base = jy_base(m + 1, x);
    const auto y = y_array(m + 1, x, base);
    if (m == 0) return -y[1];
    return 0.5 * (y[m - 1] - y[m + 1]);
}

BesselEval bessel_eval(int m, double x) {
    check_envelope(m, x);
    const JYPair base = jy_base(m + 1, x);
    const auto y = y_array(m + 1, x, base);
    BesselEval e;
    e.order = m;
    e.argument = x;
    e.j = base.j[m];
    e.y = y[m];
    if (m == 0) {
        e.jprime = -base.j[1];
        e.yprime = -y[1];
    } else {
        e.jprime = 0.5 * (base.j[m - 1] - base.j[m + 1]);
        e.yprime = 0.5 * (y[m - 1] - y[m + 1]);
    }
    return e;
}

void bessel_jy(int mmax, double x, std::vector<double>& j_out, std::vector<double>& y_out) {
    check_envelope(mmax, x);
    const JYPair base = jy_base(mmax, x);
    j_out.assign(base.j.begin(), base.j.begin() + mmax + 1);
    y_out = y_array(mmax, x, base);
}

std::pair<double, double> bessel_j0y0(double x) {
    check_envelope(0, x);
    const JYPair base = jy_base(0, x);
    return {base.j[0], base.y0};
}

}  // namespace scatter
