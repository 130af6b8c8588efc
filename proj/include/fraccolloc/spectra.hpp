#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fraccolloc/symbol.hpp"

namespace fraccolloc {

/// Eigenvalues of a symmetric dense matrix, ascending. Symmetry is checked
/// to 1e-12 (relative to the largest entry); the solve itself is Householder
/// tridiagonalization plus implicit-shift QL iteration.
std::vector<double> eig_symmetric(const Eigen::MatrixXd& T);

struct GeneralEig {
  std::vector<double> real_parts;  // ascending
  double max_imag;                 // largest |Im| encountered
};

/// Eigenvalues of a general dense real matrix by Hessenberg reduction plus
/// shifted QR, capped at 50 sweeps per eigenvalue. Returns sorted real
/// parts and the largest imaginary residue instead of discarding it.
GeneralEig eig_general(const Eigen::MatrixXd& M);

/// Sorted-sequence comparison of a spectrum against the uniform symbol
/// sampling on the grid theta_k = k pi / N, k = 1..N.
struct EigenReport {
  std::vector<double> grid;
  std::vector<double> symbol_sorted;
  std::vector<double> eigen_sorted;
  int outlier_budget;          // 4(p-1), the correction rank bound
  int outliers_above_range;    // eigenvalues above 1.05 * max f
  double deviation;            // mean |lambda_(j) - f_(j)| excluding outliers
  double max_imag;
};

EigenReport compare_to_symbol(const std::vector<double>& eigs_sorted,
                              const SymbolEvaluator& ev, int p,
                              double max_imag = 0.0);

} // namespace fraccolloc
