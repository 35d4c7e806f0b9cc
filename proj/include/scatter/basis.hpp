#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>
#include <string_view>

#include "scatter/geometry.hpp"

namespace scatter {

/// The three trial families on S.
///   WeightedTrig:  1/sqrt(2 pi a), cos(m t)/sqrt(pi a), sin(m t)/sqrt(pi a)
///   HankelRadial:  e^{i m t} H_m^{(1)}(k r(t)),  H_{-m} = (-1)^m H_m
///   BesselRadial:  e^{i m t} J_m(k r(t)),        J_{-m} = (-1)^m J_m
/// Index convention: j = 1 is the m = 0 mode; then for m = 1, 2, ... the
/// cosine (resp. e^{+imt}) mode at j = 2m and the sine (resp. e^{-imt}) mode
/// at j = 2m + 1, so J = 2M + 1 covers all modes through m = M.
enum class BasisFamily { WeightedTrig, HankelRadial, BesselRadial };

enum class InnerKind { H0, H1 };

BasisFamily parse_family(std::string_view name);  // "weighted-trig" | "hankel" | "bessel"
std::string family_name(BasisFamily family);
InnerKind parse_inner(std::string_view name);  // "h0" | "h1"
std::string inner_name(InnerKind inner);

/// Signed mode of basis index j >= 1 (1 -> 0, 2 -> +1, 3 -> -1, 4 -> +2, ...).
int basis_mode(int j);

std::complex<double> eval_basis(BasisFamily family, const BoundaryCurve& curve, double k,
                                int j, double theta);

/// n x J matrix of basis samples on the grid nodes.
Eigen::MatrixXcd basis_matrix(BasisFamily family, const BoundaryCurve& curve, double k,
                              int J, const Grid& grid);

/// (u, v)_0 = sum_j (2 pi / n) a_j u_j conj(v_j).
std::complex<double> inner_h0(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v,
                              const Grid& grid);

/// (u, v)_1 = (u, v)_0 + (u_s, v_s)_0 with u_s = (du/dtheta)/a(theta) computed
/// by trigonometric differentiation. Inputs must be resolved on the grid
/// (bandlimit < n/2).
std::complex<double> inner_h1(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v,
                              const Grid& grid);

/// G[i,j] = inner(phi_j, phi_i); Hermitian by construction.
/// Requires J <= n/2 - 1 (resolution guard for the H1 derivative).
Eigen::MatrixXcd basis_gram(BasisFamily family, const BoundaryCurve& curve, double k, int J,
                            InnerKind inner, const Grid& grid);

/// Finite-section estimate of the Riesz constants of Eq. m |c|^2 <= ||u||^2
/// <= M |c|^2: extreme eigenvalues of the H0 Gram.
struct RieszBounds {
    double lower = 0.0;
    double upper = 0.0;
    BasisFamily family = BasisFamily::WeightedTrig;
    int J = 0;
};

RieszBounds estimate_riesz_bounds(BasisFamily family, const BoundaryCurve& curve, double k,
                                  int J, const Grid& grid);

/// Gram of two sets of grid-sampled columns: G[i,j] = inner(u_j, v_i).
/// Shared by basis_gram and the Galerkin assembly.
Eigen::MatrixXcd gram_of_columns(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                                 const Grid& grid, InnerKind inner);

}  // namespace scatter
