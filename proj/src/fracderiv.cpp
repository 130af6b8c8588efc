#include "fraccolloc/fracderiv.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <Eigen/Dense>

#include "fraccolloc/gammafn.hpp"

namespace fraccolloc {

namespace {

constexpr int kMaxCardinalDegree = 24;

const PiecewisePolynomial& cardinal_piecewise_cached(int p) {
  static std::array<std::unique_ptr<PiecewisePolynomial>, kMaxCardinalDegree + 1> cache;
  static std::array<std::once_flag, kMaxCardinalDegree + 1> flags;
  if (p < 0 || p > kMaxCardinalDegree)
    throw std::invalid_argument("cardinal degree out of cached range");
  std::call_once(flags[static_cast<size_t>(p)], [p] {
    cache[static_cast<size_t>(p)] =
        std::make_unique<PiecewisePolynomial>(cardinal_to_piecewise(p));
  });
  return *cache[static_cast<size_t>(p)];
}

const QuadratureRule& legendre_rule_20() {
  static const QuadratureRule rule = gauss_jacobi_rule(20, 0.0, 0.0);
  return rule;
}

// Truncated-power closed form, accumulated in extended precision: the
// alternating sum loses ~t^{p+1} relative digits as t grows.
double cardinal_deriv_closed_form(int p, double alpha, double gamma_shift_p,
                                  double t) {
  long double acc = 0.0L;
  double sign = 1.0;
  for (int j = 0; j <= p + 1; ++j) {
    const double base = t - j;
    if (base > 0.0)
      acc += static_cast<long double>(sign * binomial(p + 1, j)) *
             powl(static_cast<long double>(base),
                  static_cast<long double>(p) - static_cast<long double>(alpha));
    sign = -sign;
  }
  return static_cast<double>(acc) / gamma_shift_p;
}

// For t beyond the support, D^alpha phi_p(t) equals the phi_p-weighted
// average of the (p+1)-th derivative of the power kernel:
//   (1/Gamma(-alpha)) * integral_0^{p+1} phi_p(s) (t-s)^{-alpha-1} ds.
double cardinal_deriv_far_field(int p, double alpha, double rgamma_neg,
                                double t) {
  if (rgamma_neg == 0.0) return 0.0;  // integer alpha: no tail
  const PiecewisePolynomial& phi = cardinal_piecewise_cached(p);
  const QuadratureRule& gl = legendre_rule_20();
  long double acc = 0.0L;
  for (int j = 0; j <= p; ++j) {
    const auto& c = phi.coefficients()[static_cast<size_t>(j)];
    for (size_t q = 0; q < gl.nodes.size(); ++q) {
      const double s = j + 0.5 * (1.0 + gl.nodes[q]);
      const double u = s - j;
      double poly = 0.0;
      for (int m = static_cast<int>(c.size()) - 1; m >= 0; --m)
        poly = poly * u + c[static_cast<size_t>(m)];
      acc += static_cast<long double>(0.5 * gl.weights[q] * poly *
                                      std::pow(t - s, -alpha - 1.0));
    }
  }
  return rgamma_neg * static_cast<double>(acc);
}

void check_caputo_order(const FractionalOrder& order) {
  if (!(order.alpha() > 1.0 && order.alpha() < 2.0))
    throw std::invalid_argument("Caputo closed form requires 1 < alpha < 2");
}

// integral over [b_k, min(b_{k+1}, x)] of (x-y)^{1-alpha} f''(y) dy for one
// interval whose second derivative has local coefficients d (powers of
// y - b_k). Exact: substitute u = x - y and expand (A-u)^m binomially.
long double kernel_integral(const std::vector<double>& d, double A, double B,
                            double alpha) {
  const long double lA = A;
  const long double lB = B;
  long double total = 0.0L;
  for (int m = 0; m < static_cast<int>(d.size()); ++m) {
    const double dm = d[static_cast<size_t>(m)];
    if (dm == 0.0) continue;
    long double sum = 0.0L;
    for (int j = 0; j <= m; ++j) {
      const long double e = 2.0L - static_cast<long double>(alpha) + j;
      const long double moment =
          (powl(lA, e) - (B > 0.0 ? powl(lB, e) : 0.0L)) / e;
      const long double term = static_cast<long double>(binomial(m, j)) *
                               powl(lA, static_cast<long double>(m - j)) * moment;
      sum += (j % 2) ? -term : term;
    }
    total += static_cast<long double>(dm) * sum;
  }
  return total;
}

double caputo_left_closed_form(const PiecewisePolynomial& f,
                               const FractionalOrder& order, double x) {
  const PiecewisePolynomial f2 = f.derivative().derivative();
  const auto& breaks = f2.breakpoints();
  long double acc = 0.0L;
  for (int k = 0; k < f2.intervals(); ++k) {
    const double bl = breaks[static_cast<size_t>(k)];
    if (bl >= x) break;
    const double br = std::min(breaks[static_cast<size_t>(k + 1)], x);
    const double A = x - bl;
    const double B = x - br;
    acc += kernel_integral(f2.coefficients()[static_cast<size_t>(k)], A,
                           B > 0.0 ? B : 0.0, order.alpha());
  }
  return static_cast<double>(acc) / order.gamma_shifted(1);
}

double adaptive_gl(const std::function<double(double)>& g, double lo, double hi,
                   double tol, int depth) {
  const QuadratureRule& gl = legendre_rule_20();
  double mass = 0.0;  // sum of |w g| for the roundoff floor
  auto panel = [&](double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    double s = 0.0;
    for (size_t q = 0; q < gl.nodes.size(); ++q) {
      const double v = gl.weights[q] * g(c + h * gl.nodes[q]);
      s += v;
      mass += std::abs(v) * std::abs(h);
    }
    return s * h;
  };
  const double whole = panel(lo, hi);
  const double mid = 0.5 * (lo + hi);
  const double split = panel(lo, mid) + panel(mid, hi);
  // stop on the requested tolerance, on the roundoff floor, or deep enough
  if (std::abs(split - whole) <= std::max(tol, 1e-15 * mass) || depth >= 28)
    return split;
  return adaptive_gl(g, lo, mid, 0.5 * tol, depth + 1) +
         adaptive_gl(g, mid, hi, 0.5 * tol, depth + 1);
}

} // namespace

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
  prefactor_ = 1.0 / (2.0 * std::cos(M_PI * alpha / 2.0));
  rgamma_neg_ = reciprocal_gamma(-alpha);
  gamma_.resize(static_cast<size_t>(kMaxShift + 1));
  for (int k = 0; k <= kMaxShift; ++k)
    gamma_[static_cast<size_t>(k)] = gamma_fn(double(k) - alpha + 1.0);
}

FractionalOrder FractionalOrder::for_solver(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0))
    throw std::invalid_argument("solver path requires 1 < alpha < 2");
  if (std::abs(std::cos(M_PI * alpha / 2.0)) <= 1e-12)
    throw std::invalid_argument("alpha too close to the prefactor singularity at 1");
  return FractionalOrder(alpha);
}

FractionalOrder FractionalOrder::for_symbol(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 2.0))
    throw std::invalid_argument("symbol path requires 0 <= alpha <= 2");
  return FractionalOrder(alpha);
}

double left_rl_cardinal(int p, const FractionalOrder& order, double t) {
  const double alpha = order.alpha();
  if (!(alpha < p))
    throw std::invalid_argument("left_rl_cardinal requires alpha < p");
  if (t <= 0.0) return 0.0;
  if (t <= p + 2.0) {
    const double g = p <= FractionalOrder::kMaxShift
                         ? order.gamma_shifted(p)
                         : gamma_fn(double(p) - alpha + 1.0);
    return cardinal_deriv_closed_form(p, alpha, g, t);
  }
  return cardinal_deriv_far_field(p, alpha, order.reciprocal_gamma_neg(), t);
}

double right_rl_cardinal(int p, const FractionalOrder& order, double t) {
  return left_rl_cardinal(p, order, double(p) + 1.0 - t);
}

double caputo_left_piecewise(const PiecewisePolynomial& f,
                             const FractionalOrder& order, double x) {
  check_caputo_order(order);
  if (!(x >= f.domain_left() && x <= f.domain_right()))
    throw std::domain_error("x outside the piecewise domain");
  return caputo_left_closed_form(f, order, x);
}

double caputo_right_piecewise(const PiecewisePolynomial& f,
                              const FractionalOrder& order, double x) {
  check_caputo_order(order);
  if (!(x >= f.domain_left() && x <= f.domain_right()))
    throw std::domain_error("x outside the piecewise domain");
  const double c = f.domain_left() + f.domain_right();
  return caputo_left_closed_form(f.reflected(c), order, c - x);
}

double rl_left_from_caputo(double caputo_value, const BoundaryData& bdata,
                           const FractionalOrder& order, double x, double a) {
  const double d = x - a;
  if (d <= 0.0) {
    if (bdata.value_left != 0.0 || bdata.deriv_left != 0.0)
      throw std::domain_error("correction singular at x = a with nonzero boundary data");
    return caputo_value;
  }
  return caputo_value +
         bdata.value_left * std::pow(d, -order.alpha()) / order.gamma_shifted(0) +
         bdata.deriv_left * std::pow(d, 1.0 - order.alpha()) / order.gamma_shifted(1);
}

double rl_right_from_caputo(double caputo_value, const BoundaryData& bdata,
                            const FractionalOrder& order, double x, double b) {
  const double d = b - x;
  if (d <= 0.0) {
    if (bdata.value_right != 0.0 || bdata.deriv_right != 0.0)
      throw std::domain_error("correction singular at x = b with nonzero boundary data");
    return caputo_value;
  }
  return caputo_value +
         bdata.value_right * std::pow(d, -order.alpha()) / order.gamma_shifted(0) -
         bdata.deriv_right * std::pow(d, 1.0 - order.alpha()) / order.gamma_shifted(1);
}

QuadratureRule gauss_jacobi_rule(int count, double a, double b) {
  if (count < 1) throw std::invalid_argument("quadrature needs at least one node");
  if (a <= -1.0 || b <= -1.0)
    throw std::invalid_argument("Jacobi exponents must exceed -1");
  Eigen::VectorXd diag(count);
  Eigen::VectorXd sub(std::max(count - 1, 0));
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < count; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag(k) = (b * b - a * a) / den;
    const double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
    const double d2 = (2.0 * k + ab) * (2.0 * k + ab);
    sub(k - 1) = std::sqrt(num / (d2 * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub);
  const double mu0 = std::pow(2.0, ab + 1.0) * gamma_fn(a + 1.0) *
                     gamma_fn(b + 1.0) / gamma_fn(ab + 2.0);
  QuadratureRule rule;
  rule.nodes.resize(static_cast<size_t>(count));
  rule.weights.resize(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    rule.nodes[static_cast<size_t>(i)] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[static_cast<size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

double gauss_jacobi_oracle(const std::function<double(double)>& g, double alpha,
                           double lo, double hi, int count) {
  const double expo = 1.0 - alpha;
  if (!(expo > -1.0 && expo < 1.0))
    throw std::invalid_argument("weight exponent 1-alpha must lie in (-1,1)");
  const QuadratureRule rule = gauss_jacobi_rule(count, expo, 0.0);
  const double half = 0.5 * (hi - lo);
  double acc = 0.0;
  for (size_t q = 0; q < rule.nodes.size(); ++q)
    acc += rule.weights[q] * g(lo + half * (1.0 + rule.nodes[q]));
  return acc * std::pow(half, 2.0 - alpha);
}

double caputo_quadrature(const PiecewisePolynomial& f,
                         const FractionalOrder& order, double x, Side side,
                         double tol) {
  check_caputo_order(order);
  if (side == Side::right) {
    const double c = f.domain_left() + f.domain_right();
    return caputo_quadrature(f.reflected(c), order, c - x, Side::left, tol);
  }
  if (!(x >= f.domain_left() && x <= f.domain_right()))
    throw std::domain_error("x outside the piecewise domain");
  const double alpha = order.alpha();
  const PiecewisePolynomial f2 = f.derivative().derivative();
  const auto& breaks = f2.breakpoints();
  double acc = 0.0;
  for (int k = 0; k < f2.intervals(); ++k) {
    const double bl = breaks[static_cast<size_t>(k)];
    if (bl >= x) break;
    const double br = std::min(breaks[static_cast<size_t>(k + 1)], x);
    auto second = [&](double y) { return f2.eval(std::min(y, br)); };
    if (br >= x) {
      // Singular span: Gauss-Jacobi absorbs the kernel exactly.
      const int nodes = std::max(2, (static_cast<int>(f2.coefficients()[static_cast<size_t>(k)].size()) + 2) / 2 + 1);
      acc += gauss_jacobi_oracle(second, alpha, bl, x, nodes);
    } else {
      auto integrand = [&](double y) {
        return std::pow(x - y, 1.0 - alpha) * second(y);
      };
      acc += adaptive_gl(integrand, bl, br, tol * 0.1, 0);
    }
  }
  return acc / order.gamma_shifted(1);
}

std::pair<double, double> inner_product_check(int p1, int p2, double alpha1,
                                              double alpha2, int k) {
  if (!(alpha1 >= 0.0 && alpha1 < p1 && alpha2 >= 0.0 && alpha2 < p2))
    throw std::invalid_argument("inner product requires 0 <= alpha_i < p_i");
  const FractionalOrder o1 = FractionalOrder::for_symbol(alpha1);
  const FractionalOrder o2 = FractionalOrder::for_symbol(alpha2);
  const FractionalOrder osum = FractionalOrder::for_symbol(alpha1 + alpha2);
  const double rhs =
      left_rl_cardinal(p1 + p2 + 1, osum, double(p2) + 1.0 - double(k));

  const double upper = double(p2) + 1.0 - double(k);
  if (upper <= 0.0) return {0.0, rhs};
  auto integrand = [&](double x) {
    return left_rl_cardinal(p1, o1, x) * right_rl_cardinal(p2, o2, x + k);
  };
  // Integer panels: every kink of either factor sits on an integer.
  double lhs = 0.0;
  double a = 0.0;
  while (a < upper) {
    const double b = std::min(std::floor(a) + 1.0, upper);
    lhs += adaptive_gl(integrand, a, b, 1e-11, 0);
    a = b;
  }
  return {lhs, rhs};
}

} // namespace fraccolloc
