#include "fraccolloc/symbol.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fraccolloc/fracderiv.hpp"
#include "fraccolloc/gammafn.hpp"

namespace fraccolloc {

namespace {

// B_{2j} / (2j)! for j = 1..8.
constexpr double kBernoulliOverFactorial[8] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

double sinc(double z) {
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{j>=0} (-1)^j a(j),
// valid for completely monotone a; error ~ (3+sqrt 8)^{-n}.
template <typename F>
double alternating_sum(F a, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

double lattice_tail(int p, double alpha, double theta, int series_terms) {
  const double s = p + 1.0 - alpha;
  const double x = theta / (2.0 * M_PI);
  const double scale = std::pow(2.0 * M_PI, -s);
  if (p % 2 == 1) {
    // All lattice terms positive: two Hurwitz zeta values.
    return scale * (hurwitz_zeta_n(s, 1.0 + x, series_terms) +
                    hurwitz_zeta_n(s, 1.0 - x, series_terms));
  }
  // Alternating signs: split even/odd k into four zeta values.
  const double h = std::pow(2.0, -s);
  return scale * h *
         (hurwitz_zeta_n(s, 1.0 + 0.5 * x, series_terms) -
          hurwitz_zeta_n(s, 0.5 + 0.5 * x, series_terms) -
          hurwitz_zeta_n(s, 1.0 - 0.5 * x, series_terms) +
          hurwitz_zeta_n(s, 0.5 - 0.5 * x, series_terms));
}

} // namespace

double hurwitz_zeta_n(double s, double a, int n) {
  if (!(s > 1.0)) throw std::invalid_argument("hurwitz_zeta requires s > 1");
  if (!(a > 0.0)) throw std::invalid_argument("hurwitz_zeta requires a > 0");
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += std::pow(k + a, -s);
  const double N = n + a;
  sum += std::pow(N, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(N, -s);
  // Euler-Maclaurin corrections: B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1}.
  double pochhammer = s;
  double npow = std::pow(N, -s - 1.0);
  for (int j = 1; j <= 8; ++j) {
    sum += kBernoulliOverFactorial[j - 1] * pochhammer * npow;
    pochhammer *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    npow /= N * N;
  }
  return sum;
}

double hurwitz_zeta(double s, double a) { return hurwitz_zeta_n(s, a, 24); }

SymbolEvaluator::SymbolEvaluator(int p, double alpha, int series_terms)
    : p_(p), alpha_(alpha), series_terms_(series_terms) {
  if (!(alpha >= 0.0 && alpha <= 2.0))
    throw std::invalid_argument("symbol requires 0 <= alpha <= 2");
  if (!(p > alpha)) throw std::invalid_argument("symbol requires p > alpha");
  if (series_terms < 16) series_terms_ = 16;
  // Euler-Maclaurin remainder: below the last correction term by orders of
  // magnitude once N + a >= 16; record the first omitted term at the worst a.
  const double s = p_ + 1.0 - alpha_;
  const double N = series_terms_ + 0.25;
  double pochhammer = s;
  for (int j = 1; j <= 16; ++j) pochhammer *= s + j;
  tail_bound_ = std::abs(kBernoulliOverFactorial[7] * pochhammer *
                         std::pow(N, -s - 17.0));
  max_value_ = 0.0;
  // Coarse scan plus golden-section refinement around the best point.
  const int scan = 10000;
  int best = 0;
  for (int k = 0; k <= scan; ++k) {
    const double v = (*this)(M_PI * k / scan);
    if (v > max_value_) {
      max_value_ = v;
      best = k;
    }
  }
  double lo = M_PI * std::max(best - 1, 0) / scan;
  double hi = M_PI * std::min(best + 1, scan) / scan;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = (*this)(x1), f2 = (*this)(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = (*this)(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = (*this)(x1);
    }
  }
  max_value_ = std::max(max_value_, std::max(f1, f2));
}

double SymbolEvaluator::operator()(double theta) const {
  if (!(theta >= -1e-12 && theta <= M_PI + 1e-12))
    throw std::domain_error("symbol argument outside [0, pi]");
  theta = std::min(std::max(theta, 0.0), M_PI);
  const double half = 0.5 * theta;
  const double principal =
      std::pow(theta, alpha_) * std::pow(sinc(half), p_ + 1);
  const double factor = std::pow(2.0 * std::sin(half), p_ + 1);
  return principal + factor * lattice_tail(p_, alpha_, theta, series_terms_);
}

std::vector<double> sample_symbol(const SymbolEvaluator& ev,
                                  const std::vector<double>& thetas) {
  std::vector<double> out(thetas.size());
  const int m = static_cast<int>(thetas.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) out[static_cast<size_t>(i)] = ev(thetas[static_cast<size_t>(i)]);
  return out;
}

std::vector<double> sample_symbol_serial(const SymbolEvaluator& ev,
                                         const std::vector<double>& thetas) {
  std::vector<double> out(thetas.size());
  for (size_t i = 0; i < thetas.size(); ++i) out[i] = ev(thetas[i]);
  return out;
}

double zero_order_fit(const SymbolEvaluator& ev) {
  const int m = 50;
  const double lo = std::log(1e-4), hi = std::log(1e-2);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    const double X = lo + (hi - lo) * i / (m - 1);
    const double Y = std::log(ev(std::exp(X)));
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

SandwichReport sandwich_check(const SymbolEvaluator& ev,
                              const std::vector<double>& grid) {
  SandwichReport rep{true, 0.0, 0.0};
  bool first = true;
  for (double theta : grid) {
    const double f = ev(theta);
    const double lower = std::pow(theta, ev.alpha()) *
                         std::pow(sinc(0.5 * theta), ev.degree() + 1);
    const double margin = f - lower;
    if (first || margin < rep.worst_lower_margin) rep.worst_lower_margin = margin;
    first = false;
    if (margin < -1e-12 * std::max(1.0, f)) rep.lower_ok = false;
    const double s = std::sin(0.5 * theta);
    if (s > 1e-8) {
      const double c = margin / std::pow(s, ev.degree() + 1);
      if (c > rep.empirical_constant) rep.empirical_constant = c;
    }
  }
  return rep;
}

DecayRatio decay_ratio_check(const SymbolEvaluator& ev) {
  DecayRatio r{};
  r.ratio = ev(M_PI) / ev(M_PI_2);
  r.bound = std::exp2(0.5 * (2.0 * ev.alpha() + 1.0 - ev.degree()));
  r.normalized_ratio = ev(M_PI) / ev.max_value();
  // the bound is attained exactly in the classical corner cases
  const double slack = 1e-12 * r.bound;
  r.ok = r.ratio <= r.bound + slack && r.normalized_ratio <= r.bound + slack;
  return r;
}

bool odd_degree_bound_check(int p, double alpha,
                            const std::vector<double>& grid) {
  if (p % 2 == 0) throw std::invalid_argument("check applies to odd p");
  const SymbolEvaluator f0(p, 0.0), fa(p, alpha), f2(p, 2.0);
  for (double theta : grid) {
    const double lo = f0(theta), mid = fa(theta), hi = f2(theta);
    const double slack = 1e-12 * std::max(1.0, hi);
    if (mid < lo - slack || mid > hi + slack) return false;
  }
  return true;
}

EvenBoundReport even_degree_bound_check(int p, double alpha, int grid_points) {
  if (p % 2 != 0) throw std::invalid_argument("check applies to even p");
  EvenBoundReport rep{};
  rep.a = std::pow(M_PI * M_PI * M_PI * M_PI / 48.0, 1.0 / alpha);
  const SymbolEvaluator f0(p, 0.0), fa(p, alpha);
  auto holds_on = [&](double lo, double hi) {
    for (int i = 0; i < grid_points; ++i) {
      const double theta = lo + (hi - lo) * i / (grid_points - 1);
      const double slack = 1e-12 * std::max(1.0, f0(theta));
      if (fa(theta) < f0(theta) - slack) return false;
    }
    return true;
  };
  rep.holds_above_a = holds_on(rep.a, M_PI);
  rep.holds_from_one = holds_on(1.0, rep.a);
  return rep;
}

double symbol_tail_series(int p, double alpha, double theta) {
  const double s = p + 1.0 - alpha;
  if (!(s > 1.0)) throw std::invalid_argument("tail series requires p + 1 - alpha > 1");
  if (theta == 0.0) return 0.0;
  // r = sum_{j>=0} (-1)^j a_j with a_j > 0 completely monotone in j.
  auto a = [&](int j) {
    const double base = 2.0 * (j + 1) * M_PI;
    return std::pow(base - theta, -s) - std::pow(base + theta, -s);
  };
  return alternating_sum(a, 30);
}

std::vector<double> toeplitz_symbol_coefficients(int p, double alpha,
                                                 int count) {
  const FractionalOrder order = FractionalOrder::for_symbol(alpha);
  const double c = 0.5 * (p + 1);
  std::vector<double> t(static_cast<size_t>(count));
#pragma omp parallel for schedule(static)
  for (int k = 0; k < count; ++k)
    t[static_cast<size_t>(k)] =
        order.riesz_prefactor() * (left_rl_cardinal(p, order, c - k) +
                                   left_rl_cardinal(p, order, c + k));
  return t;
}

double fourier_route_eval(const std::vector<double>& coeffs, double theta) {
  // Rotation recurrence in extended precision, resynchronized periodically.
  long double acc = coeffs.empty() ? 0.0L : static_cast<long double>(coeffs[0]);
  std::complex<long double> w(1.0L, 0.0L);
  const std::complex<long double> step(cosl(theta), sinl(theta));
  for (size_t k = 1; k < coeffs.size(); ++k) {
    if (k % 256 == 0)
      w = std::complex<long double>(cosl(k * static_cast<long double>(theta)),
                                    sinl(k * static_cast<long double>(theta)));
    else
      w *= step;
    acc += 2.0L * static_cast<long double>(coeffs[k]) * w.real();
  }
  return static_cast<double>(acc);
}

int fourier_route_terms(double alpha, double theta_min, double tol) {
  // |t_k| ~ A k^{-alpha-1} with A ~ Gamma(alpha+1) sin(pi alpha/2)/pi; the
  // partial-sum tail at theta is ~ |t_K| / sin(theta/2).
  const double A = gamma_fn(alpha + 1.0) * std::sin(M_PI * alpha / 2.0) / M_PI;
  const double target = tol * std::sin(0.5 * theta_min);
  double K = std::pow(2.0 * std::max(A, 0.05) / target, 1.0 / (alpha + 1.0));
  K = std::min(std::max(K, 1e3), 6e5);
  return static_cast<int>(K);
}

} // namespace fraccolloc
