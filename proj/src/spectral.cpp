#include "scatter/spectral.hpp"

#include <cmath>
#include <numbers>

#include "scatter/errors.hpp"

namespace scatter {

Eigen::MatrixXd periodic_derivative_matrix(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("derivative matrix needs even n >= 2");
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int diff = i - j;
            const double sign = (((diff % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
            d(i, j) = 0.5 * sign / std::tan(std::numbers::pi * diff / n);
        }
    }
    return d;
}

}  // namespace scatter
