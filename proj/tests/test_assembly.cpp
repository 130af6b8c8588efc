#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fraccolloc/assembly.hpp"
#include "fraccolloc/gammafn.hpp"

using namespace fraccolloc;

namespace {

// Full quadrature-route entry: left and right Caputo integrals plus the
// Riemann-Liouville corrections, with the Riesz prefactor.
double oracle_entry(const BSplineSpace& space, const FractionalOrder& order,
                    int basis, double eta) {
  const PiecewisePolynomial pw = to_piecewise_full(space, basis);
  BoundaryData bd;
  bd.value_left = eval_bspline(space, basis, 0.0);
  bd.deriv_left = eval_bspline_derivative(space, basis, 0.0, 1);
  bd.value_right = eval_bspline(space, basis, 1.0);
  bd.deriv_right = eval_bspline_derivative(space, basis, 1.0, 1);
  const double left = rl_left_from_caputo(
      caputo_quadrature(pw, order, eta, Side::left, 1e-11), bd, order, eta, 0.0);
  const double right = rl_right_from_caputo(
      caputo_quadrature(pw, order, eta, Side::right, 1e-11), bd, order, eta, 1.0);
  return order.riesz_prefactor() * (left + right);
}

} // namespace

TEST_CASE("central diagonal closed form") {
  // interior entry with i = j equals n^alpha * prefactor * 2 * D phi_p((p+1)/2)
  const int p = 3, n = 63;
  const FractionalOrder order = FractionalOrder::for_solver(1.5);
  const BSplineSpace space(p, n);
  const CollocationSystem sys = assemble_matrix(space, order);
  const int i = 30;  // basis index i+2 = 32, well inside [p+1, n]
  const double expect = std::pow(double(n), 1.5) * order.riesz_prefactor() * 2.0 *
                        left_rl_cardinal(p, order, 2.0);
  CHECK(sys.matrix(i, i) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("toeplitz first column spot value") {
  // p=2, alpha=1.5: t_0 = 2 * (-1.01168) / (2 cos(3 pi/4)) ~ 1.43073
  const FractionalOrder order = FractionalOrder::for_solver(1.5);
  const std::vector<double> t = toeplitz_first_column(2, order, 8);
  CHECK(t[0] == doctest::Approx(1.43073).epsilon(1e-5));
  const double direct = order.riesz_prefactor() * 2.0 *
                        (std::pow(1.5, 0.5) - 3.0 * std::pow(0.5, 0.5)) /
                        gamma_fn(1.5);
  CHECK(t[0] == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("toeplitz symmetry") {
  for (int p : {2, 3, 5})
    for (double alpha : {1.2, 1.5, 1.8}) {
      const FractionalOrder o = FractionalOrder::for_solver(alpha);
      const double c = 0.5 * (p + 1);
      for (int k = 1; k < 60; ++k) {
        const double tk = o.riesz_prefactor() * (left_rl_cardinal(p, o, c - k) +
                                                 right_rl_cardinal(p, o, c - k));
        const double tmk = o.riesz_prefactor() * (left_rl_cardinal(p, o, c + k) +
                                                  right_rl_cardinal(p, o, c + k));
        CHECK(std::abs(tk - tmk) <= 1e-13);
      }
    }
}

TEST_CASE("entries match the quadrature oracle") {
  std::mt19937_64 rng(77);
  for (int p : {2, 3, 4})
    for (int n : {16, 32})
      for (double alpha : {1.2, 1.5, 1.8}) {
        const BSplineSpace space(p, n);
        const FractionalOrder order = FractionalOrder::for_solver(alpha);
        const CollocationSystem sys = assemble_matrix(space, order);
        std::uniform_int_distribution<int> pick(0, space.trimmed_dimension() - 1);
        for (int s = 0; s < 50; ++s) {
          const int r = pick(rng), c = pick(rng);
          const double oracle =
              oracle_entry(space, order, c + 2, space.greville(r + 2));
          CHECK(std::abs(sys.matrix(r, c) - oracle) <= 1e-8);
        }
      }
}

TEST_CASE("left matrix zero structure") {
  const BSplineSpace space(3, 16);
  const FractionalOrder order = FractionalOrder::for_solver(1.5);
  const auto [L, R] = assemble_one_sided(space, order);
  const int N = space.trimmed_dimension();
  // prefactor * (L + R) reproduces the assembled matrix
  const CollocationSystem sys = assemble_matrix(space, order);
  CHECK((order.riesz_prefactor() * (L + R) - sys.matrix).cwiseAbs().maxCoeff() <=
        1e-12 * sys.matrix.cwiseAbs().maxCoeff());
  // eta_i <= xi_j (j >= 3) implies a zero left entry
  int zeros = 0;
  for (int r = 0; r < N; ++r)
    for (int c = 1; c < N; ++c)
      if (space.greville(r + 2) <= space.knots().knot(c + 2)) {
        CHECK(L(r, c) == 0.0);
        ++zeros;
      }
  CHECK(zeros > 0);
  // mirrored structure on the right factor
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N - 1; ++c)
      if (space.greville(r + 2) >= space.knots().knot(c + 2 + 3 + 1))
        CHECK(R(r, c) == 0.0);
}

TEST_CASE("central block equals the Toeplitz part exactly") {
  for (int p : {2, 3, 4, 5})
    for (int n : {32, 64}) {
      const BSplineSpace space(p, n);
      const FractionalOrder order = FractionalOrder::for_solver(1.5);
      const ToeplitzSplit split = toeplitz_split(assemble_matrix(space, order));
      double worst = 0.0;
      for (int i = p - 1; i <= n - 2; ++i)
        for (int j = p - 1; j <= n - 2; ++j)
          worst = std::max(worst, std::abs(split.correction(i, j)));
      CHECK(worst <= 1e-12);
    }
}

TEST_CASE("correction rank and norm") {
  for (int p : {2, 3, 4, 5})
    for (int n : {32, 64}) {
      const BSplineSpace space(p, n);
      const FractionalOrder order = FractionalOrder::for_solver(1.5);
      const ToeplitzSplit split = toeplitz_split(assemble_matrix(space, order));
      CHECK(split.rank_bound == 4 * (p - 1));
      CHECK(numerical_rank(split.correction) <= split.rank_bound);
    }
  // spectral norm stays bounded across a doubling
  for (double alpha : {1.2, 1.8}) {
    const FractionalOrder order = FractionalOrder::for_solver(alpha);
    auto norm2 = [&](int n) {
      const BSplineSpace space(3, n);
      return toeplitz_split(assemble_matrix(space, order))
          .correction.operatorNorm();
    };
    const double ratio = norm2(64) / norm2(32);
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 1.5);
  }
}

TEST_CASE("scaling law for central entries") {
  const FractionalOrder order = FractionalOrder::for_solver(1.5);
  for (int p : {2, 3}) {
    const BSplineSpace s1(p, 16), s2(p, 32);
    const CollocationSystem a1 = assemble_matrix(s1, order);
    const CollocationSystem a2 = assemble_matrix(s2, order);
    // diagonal interior entries at matching relative positions
    const double ratio = a2.matrix(16, 16) / a1.matrix(8, 8);
    CHECK(ratio == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-13));
  }
}

TEST_CASE("one-sided norms stay bounded in n") {
  for (int p : {2, 3})
    for (double alpha : {1.2, 1.8}) {
      const FractionalOrder order = FractionalOrder::for_solver(alpha);
      auto norms = [&](int n) {
        const BSplineSpace space(p, n);
        const auto [L, R] = assemble_one_sided(space, order);
        const Eigen::MatrixXd S = std::pow(double(n), -alpha) * L;
        double inf = 0.0, one = 0.0;
        for (int i = 0; i < S.rows(); ++i)
          inf = std::max(inf, S.row(i).cwiseAbs().sum());
        for (int j = 0; j < S.cols(); ++j)
          one = std::max(one, S.col(j).cwiseAbs().sum());
        return std::pair<double, double>(inf, one);
      };
      const auto [inf16, one16] = norms(16);
      const auto [inf64, one64] = norms(64);
      const auto [inf128, one128] = norms(128);
      CHECK(std::abs(inf128 - inf64) / inf128 < 0.10);
      CHECK(std::abs(one128 - one64) / one128 < 0.10);
      CHECK(inf16 > 0.0);
      CHECK(one16 > 0.0);
    }
}

TEST_CASE("rhs sampling") {
  const BSplineSpace space(3, 8);
  const Eigen::VectorXd b = assemble_rhs(space, [](double x) { return x * x; });
  REQUIRE(b.size() == space.trimmed_dimension());
  for (int i = 0; i < b.size(); ++i) {
    const double eta = space.greville(i + 2);
    CHECK(b(i) == eta * eta);
  }
}

TEST_CASE("advection-reaction assembly") {
  const BSplineSpace space(3, 16);
  CHECK(assemble_advection_reaction(space, 0.0, 0.0).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::MatrixXd reaction = assemble_advection_reaction(space, 0.0, 1.0);
  const int n = space.intervals();
  for (int r = 0; r < space.trimmed_dimension(); ++r) {
    const double eta = space.greville(r + 2);
    if (eta <= 1.0 / n || eta >= 1.0 - 1.0 / n) continue;
    CHECK(reaction.row(r).sum() == doctest::Approx(1.0).epsilon(1e-13));
  }
  // advection part holds first derivatives
  const Eigen::MatrixXd adv = assemble_advection_reaction(space, 2.0, 0.0);
  CHECK(adv(4, 4) == doctest::Approx(
                         2.0 * eval_bspline_derivative(space, 6, space.greville(6), 1))
                         .epsilon(1e-13));
}

TEST_CASE("serial and parallel assembly are identical") {
  const BSplineSpace space(4, 48);
  const FractionalOrder order = FractionalOrder::for_solver(1.3);
  const CollocationSystem a = assemble_matrix(space, order);
  const CollocationSystem b = assemble_matrix_serial(space, order);
  CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("small meshes where every column is boundary") {
  // n < p+1 leaves no interior columns; the assembly must still work
  const BSplineSpace space(5, 4);
  const FractionalOrder order = FractionalOrder::for_solver(1.5);
  const CollocationSystem sys = assemble_matrix(space, order);
  CHECK(sys.matrix.allFinite());
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(0, space.trimmed_dimension() - 1);
  for (int s = 0; s < 10; ++s) {
    const int r = pick(rng), c = pick(rng);
    const double oracle = oracle_entry(space, order, c + 2, space.greville(r + 2));
    CHECK(std::abs(sys.matrix(r, c) - oracle) <= 1e-8);
  }
}
