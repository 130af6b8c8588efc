#include "fraccolloc/assembly.hpp"

#include <cmath>
#include <stdexcept>

namespace fraccolloc {

namespace {

struct BoundaryColumn {
  PiecewisePolynomial pw;
  BoundaryData bdata;
};

// Per-column description shared by the parallel and serial fills.
struct ColumnPlan {
  std::vector<int> kind;                   // -1 interior, else index into boundary
  std::vector<BoundaryColumn> boundary;
};

ColumnPlan plan_columns(const BSplineSpace& space) {
  const int p = space.degree();
  const int n = space.intervals();
  const int N = space.trimmed_dimension();
  ColumnPlan plan;
  plan.kind.assign(static_cast<size_t>(N), -1);
  for (int c = 0; c < N; ++c) {
    const int basis = c + 2;
    if (basis >= p + 1 && basis <= n) continue;
    BoundaryColumn col{to_piecewise_full(space, basis), BoundaryData{}};
    col.bdata.value_left = eval_bspline(space, basis, 0.0);
    col.bdata.deriv_left = eval_bspline_derivative(space, basis, 0.0, 1);
    col.bdata.value_right = eval_bspline(space, basis, 1.0);
    col.bdata.deriv_right = eval_bspline_derivative(space, basis, 1.0, 1);
    plan.kind[static_cast<size_t>(c)] = static_cast<int>(plan.boundary.size());
    plan.boundary.push_back(std::move(col));
  }
  return plan;
}

// One-sided derivatives (left, right) of basis function c+2 at eta.
std::pair<double, double> one_sided_entry(const BSplineSpace& space,
                                          const FractionalOrder& order,
                                          const ColumnPlan& plan, double scale,
                                          int c, double eta) {
  const int p = space.degree();
  const int n = space.intervals();
  const int basis = c + 2;
  if (plan.kind[static_cast<size_t>(c)] < 0) {
    const double t = n * eta - basis + p + 1;
    return {scale * left_rl_cardinal(p, order, t),
            scale * right_rl_cardinal(p, order, t)};
  }
  const BoundaryColumn& col =
      plan.boundary[static_cast<size_t>(plan.kind[static_cast<size_t>(c)])];
  const double left = rl_left_from_caputo(
      caputo_left_piecewise(col.pw, order, eta), col.bdata, order, eta, 0.0);
  const double right = rl_right_from_caputo(
      caputo_right_piecewise(col.pw, order, eta), col.bdata, order, eta, 1.0);
  return {left, right};
}

template <bool Parallel>
CollocationSystem assemble_impl(const BSplineSpace& space,
                                const FractionalOrder& order) {
  const int N = space.trimmed_dimension();
  const ColumnPlan plan = plan_columns(space);
  const double scale = std::pow(double(space.intervals()), order.alpha());
  const double pref = order.riesz_prefactor();
  CollocationSystem sys{space, order, Eigen::MatrixXd(N, N),
                        Eigen::VectorXd::Zero(N)};
#pragma omp parallel for schedule(static) if (Parallel)
  for (int r = 0; r < N; ++r) {
    const double eta = space.greville(r + 2);
    for (int c = 0; c < N; ++c) {
      const auto [l, rgt] = one_sided_entry(space, order, plan, scale, c, eta);
      sys.matrix(r, c) = pref * (l + rgt);
    }
  }
  return sys;
}

} // namespace

CollocationSystem assemble_matrix(const BSplineSpace& space,
                                  const FractionalOrder& order) {
  return assemble_impl<true>(space, order);
}

CollocationSystem assemble_matrix_serial(const BSplineSpace& space,
                                         const FractionalOrder& order) {
  return assemble_impl<false>(space, order);
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> assemble_one_sided(
    const BSplineSpace& space, const FractionalOrder& order) {
  const int N = space.trimmed_dimension();
  const ColumnPlan plan = plan_columns(space);
  const double scale = std::pow(double(space.intervals()), order.alpha());
  Eigen::MatrixXd L(N, N), R(N, N);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < N; ++r) {
    const double eta = space.greville(r + 2);
    for (int c = 0; c < N; ++c) {
      const auto [l, rgt] = one_sided_entry(space, order, plan, scale, c, eta);
      L(r, c) = l;
      R(r, c) = rgt;
    }
  }
  return {std::move(L), std::move(R)};
}

Eigen::VectorXd assemble_rhs(const BSplineSpace& space,
                             const std::function<double(double)>& s) {
  const int N = space.trimmed_dimension();
  Eigen::VectorXd b(N);
  for (int i = 0; i < N; ++i) b(i) = s(space.greville(i + 2));
  return b;
}

Eigen::MatrixXd assemble_advection_reaction(const BSplineSpace& space,
                                            double gamma, double rho) {
  const int N = space.trimmed_dimension();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  if (gamma == 0.0 && rho == 0.0) return M;
#pragma omp parallel for schedule(static)
  for (int r = 0; r < N; ++r) {
    const double eta = space.greville(r + 2);
    for (int c = 0; c < N; ++c) {
      const int basis = c + 2;
      double v = 0.0;
      if (gamma != 0.0)
        v += gamma * eval_bspline_derivative(space, basis, eta, 1);
      if (rho != 0.0) v += rho * eval_bspline(space, basis, eta);
      M(r, c) = v;
    }
  }
  return M;
}

std::vector<double> toeplitz_first_column(int p, const FractionalOrder& order,
                                          int size) {
  const double c = 0.5 * (p + 1);
  std::vector<double> t(static_cast<size_t>(size));
  for (int k = 0; k < size; ++k)
    t[static_cast<size_t>(k)] =
        order.riesz_prefactor() * (left_rl_cardinal(p, order, c - k) +
                                   right_rl_cardinal(p, order, c - k));
  return t;
}

Eigen::MatrixXd toeplitz_matrix(const std::vector<double>& first_column) {
  const int N = static_cast<int>(first_column.size());
  Eigen::MatrixXd T(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      T(i, j) = first_column[static_cast<size_t>(std::abs(i - j))];
  return T;
}

ToeplitzSplit toeplitz_split(const CollocationSystem& system) {
  const int N = system.space.trimmed_dimension();
  ToeplitzSplit split;
  split.first_column =
      toeplitz_first_column(system.space.degree(), system.order, N);
  split.toeplitz = toeplitz_matrix(split.first_column);
  const double scale =
      std::pow(double(system.space.intervals()), -system.order.alpha());
  split.correction = scale * system.matrix - split.toeplitz;
  split.rank_bound = 4 * (system.space.degree() - 1);
  return split;
}

int numerical_rank(const Eigen::MatrixXd& m, double rel_threshold) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_threshold * sv(0)) ++rank;
  return rank;
}

} // namespace fraccolloc
