#include "fraccolloc/manufactured.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fraccolloc/gammafn.hpp"

namespace fraccolloc {

namespace {

// Compose sin(z(s)) for a polynomial z with z(0) = 0; returns the power
// series coefficients in s up to the degree where they certifiably stay
// below 1e-15 on |s| <= 1.
std::vector<double> sin_of_polynomial(const std::vector<double>& z, int max_degree) {
  std::vector<double> zpow{1.0};           // z^m, m = 0
  std::vector<double> out(static_cast<size_t>(max_degree + 1), 0.0);
  double inv_factorial = 1.0;
  for (int m = 1; 2 * m - 1 <= max_degree; ++m) {
    // zpow <- zpow * z (truncated)
    std::vector<double> next(std::min(zpow.size() + z.size() - 1,
                                      static_cast<size_t>(max_degree + 1)),
                             0.0);
    for (size_t i = 0; i < zpow.size(); ++i)
      for (size_t j = 0; j < z.size() && i + j < next.size(); ++j)
        next[i + j] += zpow[i] * z[j];
    zpow = std::move(next);
    // odd powers only: sin(z) = sum_k (-1)^k z^{2k+1}/(2k+1)!
    if (m % 2 == 1) {
      inv_factorial = 1.0;
      for (int t = 2; t <= m; ++t) inv_factorial /= t;
      const double sign = ((m - 1) / 2) % 2 ? -1.0 : 1.0;
      for (size_t i = 0; i < zpow.size() && i < out.size(); ++i)
        out[i] += sign * inv_factorial * zpow[i];
    }
  }
  // Trim the certified tail: coefficients of an entire function decay
  // superexponentially, so drop trailing terms below 1e-16.
  while (out.size() > 1 && std::abs(out.back()) < 1e-16) out.pop_back();
  return out;
}

} // namespace

ManufacturedSolution make_poly33() {
  ManufacturedSolution sol;
  sol.name = "poly33";
  sol.u = [](double x) {
    const double y = x * (1.0 - x);
    return y * y * y;
  };
  sol.u_second = [](double x) {
    // d^2/dx^2 of x^3 - 3x^4 + 3x^5 - x^6
    return 6.0 * x - 36.0 * x * x + 60.0 * x * x * x - 30.0 * x * x * x * x;
  };
  sol.left_coeffs = {0.0, 0.0, 0.0, 1.0, -3.0, 3.0, -1.0};
  sol.right_coeffs = sol.left_coeffs;  // symmetric under x -> 1-x
  sol.boundary = BoundaryData{};
  return sol;
}

ManufacturedSolution make_sin_pi_x2() {
  ManufacturedSolution sol;
  sol.name = "sinpix2";
  sol.u = [](double x) { return std::sin(M_PI * x * x); };
  sol.u_second = [](double x) {
    const double w = M_PI * x * x;
    return 2.0 * M_PI * std::cos(w) - 4.0 * M_PI * M_PI * x * x * std::sin(w);
  };
  // Left: sin(pi x^2) = sum_k (-1)^k pi^{2k+1} x^{4k+2} / (2k+1)!
  {
    std::vector<double> c;
    double term = M_PI;
    int k = 0;
    while (std::abs(term) > 1e-16) {
      const size_t deg = static_cast<size_t>(4 * k + 2);
      if (c.size() <= deg) c.resize(deg + 1, 0.0);
      c[deg] = term;
      ++k;
      term *= -M_PI * M_PI / ((2.0 * k) * (2.0 * k + 1.0));
    }
    sol.left_coeffs = std::move(c);
  }
  // Right: with s = 1-x, u = sin(pi(1-s)^2) = sin(pi s (2 - s)).
  sol.right_coeffs = sin_of_polynomial({0.0, 2.0 * M_PI, -M_PI}, 72);
  sol.boundary = BoundaryData{0.0, 0.0, 0.0, -2.0 * M_PI};
  return sol;
}

const ManufacturedSolution& solution_by_name(const std::string& name) {
  static const ManufacturedSolution poly = make_poly33();
  static const ManufacturedSolution sine = make_sin_pi_x2();
  if (name == "poly33") return poly;
  if (name == "sinpix2") return sine;
  throw std::invalid_argument("unknown solution name: " + name);
}

RieszRhs::RieszRhs(const ManufacturedSolution& sol, const FractionalOrder& order)
    : prefactor_(order.riesz_prefactor()), alpha_(order.alpha()) {
  auto multipliers = [&](const std::vector<double>& c) {
    std::vector<double> m(c.size(), 0.0);
    for (size_t q = 0; q < c.size(); ++q) {
      if (c[q] == 0.0) continue;
      m[q] = c[q] * gamma_fn(double(q) + 1.0) /
             gamma_fn(double(q) + 1.0 - alpha_);
    }
    return m;
  };
  left_mult_ = multipliers(sol.left_coeffs);
  right_mult_ = multipliers(sol.right_coeffs);
}

double RieszRhs::operator()(double x) const {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("Riesz right-hand side is singular at the endpoints");
  // Term-wise Riemann-Liouville rule D^a t^q = G(q+1)/G(q+1-a) t^{q-a};
  // the q = 0, 1 terms are exactly the Caputo boundary corrections.
  double left = 0.0;
  for (size_t q = 0; q < left_mult_.size(); ++q)
    if (left_mult_[q] != 0.0) left += left_mult_[q] * std::pow(x, double(q) - alpha_);
  double right = 0.0;
  const double s = 1.0 - x;
  for (size_t q = 0; q < right_mult_.size(); ++q)
    if (right_mult_[q] != 0.0) right += right_mult_[q] * std::pow(s, double(q) - alpha_);
  return prefactor_ * (left + right);
}

double riesz_rhs(const ManufacturedSolution& sol, const FractionalOrder& order,
                 double x) {
  return RieszRhs(sol, order)(x);
}

Eigen::VectorXd solve(const CollocationSystem& system) {
  const Eigen::MatrixXd& A = system.matrix;
  const Eigen::VectorXd& b = system.rhs;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const Eigen::VectorXd udiag = lu.matrixLU().diagonal().cwiseAbs();
  if (udiag.minCoeff() < 1e-14 * udiag.maxCoeff())
    throw std::runtime_error("collocation matrix numerically singular");
  Eigen::VectorXd x = lu.solve(b);
  x += lu.solve(b - A * x);  // one refinement step
  const double resid = (A * x - b).cwiseAbs().maxCoeff();
  if (resid > 1e-10 * b.cwiseAbs().maxCoeff())
    throw std::runtime_error("linear solve residual above tolerance");
  return x;
}

double error_infinity(const BSplineSpace& space, const Eigen::VectorXd& coeffs,
                      const std::function<double(double)>& exact) {
  std::vector<double> c(static_cast<size_t>(coeffs.size()));
  for (int i = 0; i < coeffs.size(); ++i) c[static_cast<size_t>(i)] = coeffs(i);
  double worst = 0.0;
  for (int m = 0; m < 1024; ++m) {
    const double x = double(m) / 1023.0;
    worst = std::max(worst, std::abs(eval_spline(space, c, x) - exact(x)));
  }
  return worst;
}

ConvergenceTable convergence_study(int p, double alpha,
                                   const ManufacturedSolution& sol,
                                   const std::vector<int>& ns) {
  const FractionalOrder order = FractionalOrder::for_solver(alpha);
  ConvergenceTable table{p, alpha, {}};
  double prev = 0.0;
  for (size_t idx = 0; idx < ns.size(); ++idx) {
    const int n = ns[idx];
    BSplineSpace space(p, n);
    CollocationSystem sys = assemble_matrix(space, order);
    const RieszRhs rhs(sol, order);
    sys.rhs = assemble_rhs(space, [&](double x) { return rhs(x); });
    const Eigen::VectorXd u = solve(sys);
    const double err = error_infinity(space, u, sol.u);
    ConvergenceRow row{n, err, std::numeric_limits<double>::quiet_NaN()};
    if (idx > 0) row.order = std::log2(prev / err);
    prev = err;
    table.rows.push_back(row);
  }
  return table;
}

std::vector<ConvergenceTable> convergence_grid(const std::vector<int>& ps,
                                               const std::vector<double>& alphas,
                                               const ManufacturedSolution& sol,
                                               const std::vector<int>& ns) {
  const int cells = static_cast<int>(ps.size() * alphas.size());
  std::vector<ConvergenceTable> out(static_cast<size_t>(cells));
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < cells; ++idx) {
    const int p = ps[static_cast<size_t>(idx) / alphas.size()];
    const double alpha = alphas[static_cast<size_t>(idx) % alphas.size()];
    out[static_cast<size_t>(idx)] = convergence_study(p, alpha, sol, ns);
  }
  return out;
}

double order_model(int p, double alpha) {
  return (p % 2 == 0) ? p + 2.0 - alpha : p + 1.0 - alpha;
}

} // namespace fraccolloc
