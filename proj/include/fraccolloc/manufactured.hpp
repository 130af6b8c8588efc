#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fraccolloc/assembly.hpp"

namespace fraccolloc {

/// An exact solution with both endpoint power-series expansions, u(x) =
/// sum_q left[q] x^q = sum_q right[q] (1-x)^q on [0,1], u(0) = u(1) = 0.
/// The expansions drive the exact term-wise fractional differentiation of
/// the right-hand side; series tails are certified below 1e-13 on [0,1].
struct ManufacturedSolution {
  std::string name;
  std::function<double(double)> u;
  std::function<double(double)> u_second;  // for integer-order limit checks
  std::vector<double> left_coeffs;         // powers of x
  std::vector<double> right_coeffs;        // powers of (1-x)
  BoundaryData boundary;
};

/// u(x) = x^3 (1-x)^3.
ManufacturedSolution make_poly33();
/// u(x) = sin(pi x^2).
ManufacturedSolution make_sin_pi_x2();
/// Registry lookup by name ("poly33", "sinpix2"); throws on unknown names.
const ManufacturedSolution& solution_by_name(const std::string& name);

/// Riesz right-hand side evaluator with the fractional monomial multipliers
/// Gamma(q+1)/Gamma(q+1-alpha) precomputed per solution/order pair.
class RieszRhs {
 public:
  RieszRhs(const ManufacturedSolution& sol, const FractionalOrder& order);
  /// prefactor * (left RL + right RL) of u at x, x in (0,1).
  double operator()(double x) const;

 private:
  std::vector<double> left_mult_;
  std::vector<double> right_mult_;
  double prefactor_;
  double alpha_;
};

double riesz_rhs(const ManufacturedSolution& sol, const FractionalOrder& order,
                 double x);

/// Dense LU solve with one step of iterative refinement; the residual is
/// required to satisfy |A u - b|_inf <= 1e-10 |b|_inf.
Eigen::VectorXd solve(const CollocationSystem& system);

/// Max error over the 1024 sample points x_m = m/1023.
double error_infinity(const BSplineSpace& space, const Eigen::VectorXd& coeffs,
                      const std::function<double(double)>& exact);

struct ConvergenceRow {
  int n;
  double error;
  double order;  // NaN on the first row
};

struct ConvergenceTable {
  int p;
  double alpha;
  std::vector<ConvergenceRow> rows;
};

/// Errors and observed orders over a doubling sequence of meshes.
ConvergenceTable convergence_study(int p, double alpha,
                                   const ManufacturedSolution& sol,
                                   const std::vector<int>& ns = {4, 8, 16, 32,
                                                                 64});

/// All (p, alpha) cells of a study, cells run concurrently.
std::vector<ConvergenceTable> convergence_grid(
    const std::vector<int>& ps, const std::vector<double>& alphas,
    const ManufacturedSolution& sol,
    const std::vector<int>& ns = {4, 8, 16, 32, 64});

/// Conjectured asymptotic order: p+2-alpha for even p, p+1-alpha for odd p.
double order_model(int p, double alpha);

} // namespace fraccolloc
