#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fraccolloc/fracderiv.hpp"
#include "fraccolloc/splines.hpp"

namespace fraccolloc {

/// Dense collocation system for the Riesz fractional operator on the
/// trimmed spline space: matrix(i-1, j-1) holds the Riesz derivative of
/// N_{j}^p at eta_{i} for i, j = 2..n+p-1 (order n+p-2).
struct CollocationSystem {
  BSplineSpace space;
  FractionalOrder order;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
};

/// Assemble the collocation matrix. Interior columns use the scaled
/// cardinal closed form n^alpha D phi_p(n eta - j + p + 1); the 2(p-1)
/// boundary columns go through the exact piecewise Caputo form plus the
/// Riemann-Liouville corrections. Rows are filled in parallel (OpenMP);
/// every entry depends only on immutable inputs, so the result is
/// deterministic regardless of fill order.
CollocationSystem assemble_matrix(const BSplineSpace& space,
                                  const FractionalOrder& order);

/// Plain-loop reference used by the tests and the benchmark; entries are
/// bit-identical to assemble_matrix.
CollocationSystem assemble_matrix_serial(const BSplineSpace& space,
                                         const FractionalOrder& order);

/// The two one-sided matrices (left and right derivatives) before the Riesz
/// prefactor: matrix = prefactor * (left + right).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> assemble_one_sided(
    const BSplineSpace& space, const FractionalOrder& order);

/// Right-hand side: s evaluated at the trimmed Greville points.
Eigen::VectorXd assemble_rhs(const BSplineSpace& space,
                             const std::function<double(double)>& s);

/// Advection/reaction contribution gamma * N_j'(eta_i) + rho * N_j(eta_i);
/// the caller adds it to the diffusion matrix.
Eigen::MatrixXd assemble_advection_reaction(const BSplineSpace& space,
                                            double gamma, double rho);

/// First column of the symmetric Toeplitz part:
/// t_k = prefactor * (D_left + D_right) phi_p((p+1)/2 - k).
std::vector<double> toeplitz_first_column(int p, const FractionalOrder& order,
                                          int size);

/// Symmetric Toeplitz matrix from its first column.
Eigen::MatrixXd toeplitz_matrix(const std::vector<double>& first_column);

/// Toeplitz-plus-correction split of the scaled system:
/// n^{-alpha} A = T + R with rank(R) <= 4(p-1).
struct ToeplitzSplit {
  std::vector<double> first_column;
  Eigen::MatrixXd toeplitz;
  Eigen::MatrixXd correction;
  int rank_bound;
};

ToeplitzSplit toeplitz_split(const CollocationSystem& system);

/// Count of singular values above rel_threshold times the largest.
int numerical_rank(const Eigen::MatrixXd& m, double rel_threshold = 1e-10);

} // namespace fraccolloc
