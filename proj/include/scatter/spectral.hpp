#pragma once

#include <Eigen/Core>

namespace scatter {

/// Trigonometric differentiation matrix on the uniform periodic grid
/// theta_j = 2 pi j / n (n even): D[i][j] = (1/2)(-1)^{i-j} cot((theta_i-theta_j)/2),
/// zero diagonal. Exact for trigonometric polynomials of degree < n/2.
Eigen::MatrixXd periodic_derivative_matrix(int n);

}  // namespace scatter
