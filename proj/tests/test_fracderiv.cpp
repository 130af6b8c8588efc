#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fraccolloc/fracderiv.hpp"
#include "fraccolloc/gammafn.hpp"
#include "fraccolloc/splines.hpp"

using namespace fraccolloc;

TEST_CASE("gamma function") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  // negative non-integer arguments through the reflection formula
  CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(gamma_fn(-1.5) == doctest::Approx(4.0 * std::sqrt(M_PI) / 3.0).epsilon(1e-13));
  // agreement with the standard library over the working range
  for (double x = 0.05; x <= 12.0; x += 0.173)
    CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-1.0) == 0.0);
  CHECK(reciprocal_gamma(-2.0) == 0.0);
  CHECK(reciprocal_gamma(2.5) == doctest::Approx(1.0 / std::tgamma(2.5)).epsilon(1e-13));
  CHECK(binomial(6, 3) == 20.0);
  CHECK(binomial(4, 0) == 1.0);
  CHECK(binomial(4, 5) == 0.0);
}

TEST_CASE("fractional order guards") {
  CHECK_THROWS_AS(FractionalOrder::for_solver(1.0), std::invalid_argument);
  CHECK_THROWS_AS(FractionalOrder::for_solver(2.0), std::invalid_argument);
  CHECK_THROWS_AS(FractionalOrder::for_solver(0.5), std::invalid_argument);
  CHECK_THROWS_AS(FractionalOrder::for_symbol(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(FractionalOrder::for_symbol(2.1), std::invalid_argument);
  const FractionalOrder o = FractionalOrder::for_solver(1.5);
  CHECK(o.riesz_prefactor() ==
        doctest::Approx(1.0 / (2.0 * std::cos(0.75 * M_PI))).epsilon(1e-15));
  CHECK(o.gamma_shifted(0) == doctest::Approx(gamma_fn(-0.5)).epsilon(1e-14));
  CHECK(o.gamma_shifted(2) == doctest::Approx(gamma_fn(1.5)).epsilon(1e-14));
  const FractionalOrder sym = FractionalOrder::for_symbol(0.0);
  CHECK(sym.alpha() == 0.0);
}

TEST_CASE("cardinal fractional derivative: hand value") {
  // p=2, alpha=1.5, t=1.5: (1.5^{1/2} - 3 * 0.5^{1/2}) / Gamma(1.5)
  const FractionalOrder o = FractionalOrder::for_solver(1.5);
  const double expect =
      (std::pow(1.5, 0.5) - 3.0 * std::pow(0.5, 0.5)) / gamma_fn(1.5);
  CHECK(left_rl_cardinal(2, o, 1.5) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(expect == doctest::Approx(-1.01168).epsilon(1e-5));
  CHECK(left_rl_cardinal(2, o, 0.0) == 0.0);
  CHECK(left_rl_cardinal(2, o, -1.0) == 0.0);
  CHECK_THROWS_AS(left_rl_cardinal(2, FractionalOrder::for_symbol(2.0), 1.0),
                  std::invalid_argument);
}

TEST_CASE("cardinal fractional derivative: integer-order limits") {
  const FractionalOrder o0 = FractionalOrder::for_symbol(0.0);
  const FractionalOrder o1 = FractionalOrder::for_symbol(1.0);
  for (int p : {3, 4})
    for (int g = 0; g <= 120; ++g) {
      const double t = (p + 1.0) * g / 120.0;
      CHECK(std::abs(left_rl_cardinal(p, o0, t) - cardinal_bspline(p, t)) <= 1e-10);
      CHECK(std::abs(left_rl_cardinal(p, o1, t) -
                     cardinal_bspline_derivative(p, t, 1)) <= 1e-10);
    }
}

TEST_CASE("reflection identity") {
  const FractionalOrder o = FractionalOrder::for_solver(1.5);
  // fixed point at the support midpoint
  CHECK(right_rl_cardinal(2, o, 1.5) ==
        doctest::Approx(left_rl_cardinal(2, o, 1.5)).epsilon(1e-15));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int p : {2, 3, 4})
    for (int t = 0; t < 50; ++t) {
      const double x = unit(rng) * (p + 4.0) - 1.0;
      CHECK(right_rl_cardinal(p, o, x) == left_rl_cardinal(p, o, p + 1.0 - x));
    }
  const FractionalOrder o4 = FractionalOrder::for_symbol(0.0);
  for (double t : {0.3, 1.7, 3.9})
    CHECK(right_rl_cardinal(4, o4, t) ==
          doctest::Approx(cardinal_bspline(4, t)).epsilon(1e-12));
}

TEST_CASE("closed form vs quadrature across the support and beyond") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int p : {2, 3, 4})
    for (double alpha : {1.2, 1.3, 1.8}) {
      const FractionalOrder o = FractionalOrder::for_solver(alpha);
      const PiecewisePolynomial phi = cardinal_to_piecewise(p);
      for (int s = 0; s < 15; ++s) {
        const double t = 0.05 + unit(rng) * (p + 0.9);
        const double closed = left_rl_cardinal(p, o, t);
        const double quad = caputo_quadrature(phi, o, t, Side::left, 1e-11);
        CHECK(std::abs(closed - quad) <= 1e-9);
      }
      // right-sided values against the mirrored quadrature
      for (double t : {0.4, 1.3, 2.1}) {
        const double closed = right_rl_cardinal(p, o, t);
        const double quad = caputo_quadrature(phi, o, t, Side::right, 1e-11);
        CHECK(std::abs(closed - quad) <= 1e-9);
      }
    }
}

TEST_CASE("far-field branch is continuous at the switch point") {
  for (int p : {2, 3, 5, 8})
    for (double alpha : {1.2, 1.5, 1.9}) {
      const FractionalOrder o = FractionalOrder::for_solver(alpha);
      const double eps = 1e-9;
      const double below = left_rl_cardinal(p, o, p + 2.0 - eps);
      const double above = left_rl_cardinal(p, o, p + 2.0 + eps);
      CHECK(below == doctest::Approx(above).epsilon(1e-7));
      // far tail decays like t^{-alpha-1}
      const double v1 = left_rl_cardinal(p, o, 50.0);
      const double v2 = left_rl_cardinal(p, o, 100.0);
      CHECK(v1 / v2 == doctest::Approx(std::pow(2.0, alpha + 1.0)).epsilon(0.2));
    }
}

TEST_CASE("Caputo of monomials") {
  const FractionalOrder o = FractionalOrder::for_solver(1.5);
  const PiecewisePolynomial y2({0.0, 1.0}, {{0.0, 0.0, 1.0}});
  CHECK(caputo_left_piecewise(y2, o, 1.0) ==
        doctest::Approx(2.0 / gamma_fn(1.5)).epsilon(1e-14));
  CHECK(2.0 / gamma_fn(1.5) == doctest::Approx(2.25676).epsilon(1e-5));
  const PiecewisePolynomial constant({0.0, 1.0}, {{5.0}});
  for (double alpha : {1.2, 1.5, 1.8}) {
    const FractionalOrder oo = FractionalOrder::for_solver(alpha);
    for (double x : {0.2, 0.7, 1.0})
      CHECK(caputo_left_piecewise(constant, oo, x) == 0.0);
  }
  CHECK_THROWS_AS(caputo_left_piecewise(y2, o, 1.5), std::domain_error);
}

TEST_CASE("monomial rule across orders") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double alpha : {1.2, 1.5, 1.8}) {
    const FractionalOrder o = FractionalOrder::for_solver(alpha);
    for (int q = 2; q <= 8; ++q) {
      std::vector<double> c(static_cast<size_t>(q + 1), 0.0);
      c.back() = 1.0;
      const PiecewisePolynomial f({0.0, 1.0}, {c});
      for (int s = 0; s < 50; ++s) {
        const double x = 0.02 + 0.96 * unit(rng);
        const double exact =
            gamma_fn(q + 1.0) / gamma_fn(q + 1.0 - alpha) * std::pow(x, q - alpha);
        CHECK(std::abs(caputo_left_piecewise(f, o, x) - exact) <=
              1e-11 * std::abs(exact));
      }
    }
  }
}

TEST_CASE("Riemann-Liouville corrections") {
  const FractionalOrder o = FractionalOrder::for_solver(1.4);
  BoundaryData zero{};
  CHECK(rl_left_from_caputo(3.25, zero, o, 0.5, 0.0) == 3.25);
  // u'(0+) = p*n correction shape
  const double pn = 12.0;
  BoundaryData slope{0.0, pn, 0.0, 0.0};
  const double x = 0.3;
  CHECK(rl_left_from_caputo(0.0, slope, o, x, 0.0) ==
        doctest::Approx(pn * std::pow(x, 1.0 - 1.4) / gamma_fn(2.0 - 1.4))
            .epsilon(1e-14));
  // sin(pi x^2): u'(1-) = -2pi gives +2pi (1-x)^{1-alpha}/Gamma(2-alpha)
  BoundaryData sine{0.0, 0.0, 0.0, -2.0 * M_PI};
  CHECK(rl_right_from_caputo(0.0, sine, o, x, 1.0) ==
        doctest::Approx(2.0 * M_PI * std::pow(1.0 - x, 1.0 - 1.4) /
                        gamma_fn(2.0 - 1.4))
            .epsilon(1e-14));
  BoundaryData nonzero{1.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(rl_left_from_caputo(0.0, nonzero, o, 0.0, 0.0), std::domain_error);
}

TEST_CASE("RL and Caputo coincide under homogeneous data") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = 1.1 + 0.8 * unit(rng);
    const FractionalOrder o = FractionalOrder::for_solver(alpha);
    std::vector<double> c(7, 0.0);
    for (size_t q = 2; q < c.size(); ++q) c[q] = coeff(rng);
    const PiecewisePolynomial f({0.0, 1.0}, {c});
    const double x = 0.05 + 0.9 * unit(rng);
    double rl = 0.0;
    for (size_t q = 2; q < c.size(); ++q)
      rl += c[q] * gamma_fn(q + 1.0) / gamma_fn(q + 1.0 - alpha) *
            std::pow(x, double(q) - alpha);
    CHECK(std::abs(rl - caputo_left_piecewise(f, o, x)) <= 1e-11);
  }
}

TEST_CASE("Gauss-Jacobi rule") {
  auto one = [](double) { return 1.0; };
  CHECK(gauss_jacobi_oracle(one, 1.5, 0.0, 1.0, 4) ==
        doctest::Approx(2.0).epsilon(1e-13));
  // Beta identity: integral_0^1 y^3 (1-y)^{-0.2} dy = B(4, 0.8)
  auto cubic = [](double y) { return y * y * y; };
  const double beta = gamma_fn(4.0) * gamma_fn(0.8) / gamma_fn(4.8);
  CHECK(gauss_jacobi_oracle(cubic, 1.2, 0.0, 1.0, 8) ==
        doctest::Approx(beta).epsilon(1e-13));
  // polynomial exactness: degree 7 with 4 nodes
  auto poly7 = [](double y) { return std::pow(2.0 * y - 1.0, 7) + y; };
  CHECK(gauss_jacobi_oracle(poly7, 1.0, 0.0, 1.0, 4) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(gauss_jacobi_oracle(one, 1.5, 0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_jacobi_oracle(one, 2.5, 0.0, 1.0, 4), std::invalid_argument);
  // Legendre special case
  const QuadratureRule leg = gauss_jacobi_rule(5, 0.0, 0.0);
  double acc = 0.0;
  for (size_t q = 0; q < leg.nodes.size(); ++q)
    acc += leg.weights[q] * std::pow(leg.nodes[q], 8);
  CHECK(acc == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("inner-product identity") {
  // classical case alpha1 = alpha2 = 0 reduces to the B-spline convolution
  for (int p1 : {2, 3})
    for (int p2 : {2, 3})
      for (int k = -2; k <= 2; ++k) {
        const auto [lhs, rhs] = inner_product_check(p1, p2, 0.0, 0.0, k);
        CHECK(std::abs(lhs - cardinal_bspline(p1 + p2 + 1, p2 + 1.0 - k)) <= 1e-10);
        CHECK(std::abs(lhs - rhs) <= 1e-10);
      }
  // fractional case from the identity itself
  {
    const auto [lhs, rhs] = inner_product_check(3, 3, 0.7, 0.7, 0);
    CHECK(std::abs(lhs - rhs) <= 1e-8);
  }
  // disjoint supports on the right: both sides vanish
  {
    const auto [lhs, rhs] = inner_product_check(2, 2, 0.4, 0.4, 6);
    CHECK(lhs == 0.0);
    CHECK(rhs == 0.0);
  }
  // subset of the full verification grid
  for (int p1 : {2, 3})
    for (double a1 : {0.0, 0.9})
      for (double a2 : {0.4, 0.9})
        for (int k : {-3, -1, 0, 2}) {
          const auto [lhs, rhs] = inner_product_check(p1, 3, a1, a2, k);
          CHECK(std::abs(lhs - rhs) <= 1e-8);
        }
  CHECK_THROWS_AS(inner_product_check(2, 2, 2.5, 0.0, 0), std::invalid_argument);
}
