#include "fraccolloc/splines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fraccolloc/gammafn.hpp"

namespace fraccolloc {

namespace {

constexpr int kMinDegree = 2;
constexpr int kMaxDegree = 10;
constexpr int kMinIntervals = 2;
constexpr int kMaxIntervals = 4096;

// 1-based span index s with xi_s <= x < xi_{s+1}; x = 1 maps to the last
// nonempty span so the right endpoint behaves as a closed interval.
int locate_span(const KnotVector& kv, double x) {
  const int p = kv.degree();
  const int n = kv.intervals();
  if (x >= 1.0) return n + p;
  // Interior spans are [xi_{p+1+i}, xi_{p+2+i}] = [i/n, (i+1)/n].
  int cell = static_cast<int>(std::floor(x * n));
  if (cell >= n) cell = n - 1;
  // floor can land one cell off when x sits on a knot that is not exactly
  // representable; nudge into the half-open span.
  while (cell > 0 && x < kv.knot(p + 1 + cell)) --cell;
  while (cell < n - 1 && x >= kv.knot(p + 2 + cell)) ++cell;
  return p + 1 + cell;
}

// Textbook Cox-de Boor recursion with the zero-denominator convention.
double cox_de_boor(const KnotVector& kv, int i, int k, double x, int span) {
  if (k == 0) return i == span ? 1.0 : 0.0;
  // Outside the support nothing survives; prune for speed.
  if (span < i || span > i + k) return 0.0;
  double value = 0.0;
  const double d1 = kv.knot(i + k) - kv.knot(i);
  if (d1 > 0.0)
    value += (x - kv.knot(i)) / d1 * cox_de_boor(kv, i, k - 1, x, span);
  const double d2 = kv.knot(i + k + 1) - kv.knot(i + 1);
  if (d2 > 0.0)
    value += (kv.knot(i + k + 1) - x) / d2 * cox_de_boor(kv, i + 1, k - 1, x, span);
  return value;
}

double derivative_rec(const KnotVector& kv, int i, int k, double x, int span,
                      int order) {
  if (order == 0) return cox_de_boor(kv, i, k, x, span);
  if (span < i || span > i + k) return 0.0;
  double value = 0.0;
  const double d1 = kv.knot(i + k) - kv.knot(i);
  if (d1 > 0.0) value += derivative_rec(kv, i, k - 1, x, span, order - 1) / d1;
  const double d2 = kv.knot(i + k + 1) - kv.knot(i + 1);
  if (d2 > 0.0)
    value -= derivative_rec(kv, i + 1, k - 1, x, span, order - 1) / d2;
  return k * value;
}

void check_basis_index(const BSplineSpace& space, int i) {
  if (i < 1 || i > space.dimension())
    throw std::invalid_argument("basis index out of range: " + std::to_string(i));
}

void check_point(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("evaluation point outside [0,1]");
}

// Taylor coefficients about `left` from derivative samples taken at `center`:
// f(x) = sum_m d[m]/m! (x-center)^m  ->  sum_j c[j] (x-left)^j.
std::vector<double> shift_taylor(const std::vector<double>& derivs, double center,
                                 double left) {
  const int deg = static_cast<int>(derivs.size()) - 1;
  const double h = left - center;
  std::vector<double> c(derivs.size(), 0.0);
  for (int j = 0; j <= deg; ++j) {
    double factorial_j = 1.0;
    for (int t = 2; t <= j; ++t) factorial_j *= t;
    double acc = 0.0;
    for (int m = deg; m >= j; --m) {
      double fact_mj = 1.0;
      for (int t = 2; t <= m - j; ++t) fact_mj *= t;
      acc += derivs[static_cast<size_t>(m)] / (factorial_j * fact_mj) *
             std::pow(h, m - j);
    }
    c[static_cast<size_t>(j)] = acc;
  }
  return c;
}

} // namespace

KnotVector::KnotVector(int degree, int intervals) : p_(degree), n_(intervals) {
  if (degree < kMinDegree || degree > kMaxDegree)
    throw std::invalid_argument("degree must be in [2, 10]");
  if (intervals < kMinIntervals || intervals > kMaxIntervals)
    throw std::invalid_argument("mesh intervals must be in [2, 4096]");
  knots_.resize(static_cast<size_t>(2 * p_ + n_ + 1));
  for (int i = 0; i < p_; ++i) knots_[static_cast<size_t>(i)] = 0.0;
  for (int i = 0; i <= n_; ++i)
    knots_[static_cast<size_t>(p_ + i)] = double(i) / double(n_);
  for (int i = 0; i < p_; ++i)
    knots_[static_cast<size_t>(p_ + n_ + 1 + i)] = 1.0;
}

BSplineSpace::BSplineSpace(int degree, int intervals) : kv_(degree, intervals) {
  const int p = kv_.degree();
  const int n = kv_.intervals();
  greville_.reserve(static_cast<size_t>(n + p - 2));
  for (int i = 2; i <= n + p - 1; ++i) {
    double s = 0.0;
    for (int j = 1; j <= p; ++j) s += kv_.knot(i + j);
    greville_.push_back(s / p);
  }
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breakpoints,
                                         std::vector<std::vector<double>> coeffs)
    : breaks_(std::move(breakpoints)), coeffs_(std::move(coeffs)) {
  if (breaks_.size() < 2 || coeffs_.size() + 1 != breaks_.size())
    throw std::invalid_argument("piecewise polynomial needs one coefficient row per interval");
  if (!std::is_sorted(breaks_.begin(), breaks_.end()))
    throw std::invalid_argument("breakpoints must be non-decreasing");
}

double PiecewisePolynomial::eval(double x) const {
  if (!(x >= breaks_.front() && x <= breaks_.back()))
    throw std::domain_error("point outside the piecewise domain");
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  int k = static_cast<int>(it - breaks_.begin()) - 1;
  if (k >= intervals()) k = intervals() - 1;
  if (k < 0) k = 0;
  const auto& c = coeffs_[static_cast<size_t>(k)];
  const double t = x - breaks_[static_cast<size_t>(k)];
  double value = 0.0;
  for (int m = static_cast<int>(c.size()) - 1; m >= 0; --m)
    value = value * t + c[static_cast<size_t>(m)];
  return value;
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
  std::vector<std::vector<double>> dc(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c.size() <= 1) {
      dc[k] = {0.0};
      continue;
    }
    dc[k].resize(c.size() - 1);
    for (size_t m = 1; m < c.size(); ++m)
      dc[k][m - 1] = double(m) * c[m];
  }
  return PiecewisePolynomial(breaks_, std::move(dc));
}

PiecewisePolynomial PiecewisePolynomial::reflected(double c) const {
  const int ni = intervals();
  std::vector<double> rb(breaks_.size());
  for (size_t k = 0; k < breaks_.size(); ++k)
    rb[k] = c - breaks_[breaks_.size() - 1 - k];
  std::vector<std::vector<double>> rc(static_cast<size_t>(ni));
  for (int k = 0; k < ni; ++k) {
    // New interval k mirrors old interval ni-1-k. With L the interval length,
    // f(c - y) = sum_m a_m (L - s)^m where s = y - new_left; expand binomially.
    const int src = ni - 1 - k;
    const auto& a = coeffs_[static_cast<size_t>(src)];
    const double L = breaks_[static_cast<size_t>(src + 1)] - breaks_[static_cast<size_t>(src)];
    const int deg = static_cast<int>(a.size()) - 1;
    std::vector<double> out(a.size(), 0.0);
    for (int m = 0; m <= deg; ++m) {
      const double am = a[static_cast<size_t>(m)];
      if (am == 0.0) continue;
      for (int j = 0; j <= m; ++j)
        out[static_cast<size_t>(j)] +=
            am * binomial(m, j) * std::pow(L, m - j) * ((j % 2) ? -1.0 : 1.0);
    }
    rc[static_cast<size_t>(k)] = std::move(out);
  }
  return PiecewisePolynomial(std::move(rb), std::move(rc));
}

double eval_bspline(const BSplineSpace& space, int i, double x) {
  check_basis_index(space, i);
  check_point(x);
  const KnotVector& kv = space.knots();
  return cox_de_boor(kv, i, kv.degree(), x, locate_span(kv, x));
}

double eval_bspline_derivative(const BSplineSpace& space, int i, double x,
                               int order) {
  check_basis_index(space, i);
  check_point(x);
  if (order < 1 || order > space.degree())
    throw std::invalid_argument("derivative order must be in 1..p");
  const KnotVector& kv = space.knots();
  return derivative_rec(kv, i, kv.degree(), x, locate_span(kv, x), order);
}

double cardinal_bspline(int p, double t) {
  if (p < 0) throw std::invalid_argument("cardinal degree must be >= 0");
  if (t < 0.0 || t >= p + 1) return (p == 0 && t < 1.0 && t >= 0.0) ? 1.0 : 0.0;
  if (p == 0) return 1.0;
  return t / p * cardinal_bspline(p - 1, t) +
         (p + 1 - t) / p * cardinal_bspline(p - 1, t - 1.0);
}

double cardinal_bspline_derivative(int p, double t, int order) {
  if (order == 0) return cardinal_bspline(p, t);
  if (order > p) throw std::invalid_argument("derivative order must be <= p");
  return cardinal_bspline_derivative(p - 1, t, order - 1) -
         cardinal_bspline_derivative(p - 1, t - 1.0, order - 1);
}

PiecewisePolynomial to_piecewise(const BSplineSpace& space, int i) {
  check_basis_index(space, i);
  const KnotVector& kv = space.knots();
  const int p = kv.degree();
  const int n = kv.intervals();
  // Nonempty spans of the support [xi_i, xi_{i+p+1}].
  const int first = std::max(i, p + 1);
  const int last = std::min(i + p, n + p);
  std::vector<double> breaks;
  std::vector<std::vector<double>> coeffs;
  for (int s = first; s <= last; ++s) {
    const double a = kv.knot(s);
    const double b = kv.knot(s + 1);
    if (breaks.empty()) breaks.push_back(a);
    breaks.push_back(b);
    const double mid = 0.5 * (a + b);
    std::vector<double> derivs(static_cast<size_t>(p + 1));
    for (int m = 0; m <= p; ++m)
      derivs[static_cast<size_t>(m)] = derivative_rec(kv, i, p, mid, s, m);
    coeffs.push_back(shift_taylor(derivs, mid, a));
  }
  return PiecewisePolynomial(std::move(breaks), std::move(coeffs));
}

PiecewisePolynomial to_piecewise_full(const BSplineSpace& space, int i) {
  const PiecewisePolynomial local = to_piecewise(space, i);
  const KnotVector& kv = space.knots();
  const int p = kv.degree();
  const int n = kv.intervals();
  std::vector<double> breaks;
  std::vector<std::vector<double>> coeffs;
  breaks.reserve(static_cast<size_t>(n + 1));
  int local_k = 0;
  for (int s = p + 1; s <= n + p; ++s) {
    const double a = kv.knot(s);
    if (breaks.empty()) breaks.push_back(a);
    breaks.push_back(kv.knot(s + 1));
    if (a >= local.domain_left() - 1e-15 && a < local.domain_right() - 1e-15) {
      coeffs.push_back(local.coefficients()[static_cast<size_t>(local_k++)]);
    } else {
      coeffs.push_back(std::vector<double>{0.0});
    }
  }
  return PiecewisePolynomial(std::move(breaks), std::move(coeffs));
}

PiecewisePolynomial cardinal_to_piecewise(int p) {
  std::vector<double> breaks;
  std::vector<std::vector<double>> coeffs;
  for (int j = 0; j <= p; ++j) {
    if (breaks.empty()) breaks.push_back(0.0);
    breaks.push_back(double(j + 1));
    const double mid = j + 0.5;
    std::vector<double> derivs(static_cast<size_t>(p + 1));
    for (int m = 0; m <= p; ++m)
      derivs[static_cast<size_t>(m)] = cardinal_bspline_derivative(p, mid, m);
    coeffs.push_back(shift_taylor(derivs, mid, double(j)));
  }
  return PiecewisePolynomial(std::move(breaks), std::move(coeffs));
}

std::vector<double> greville_points(const BSplineSpace& space) {
  return space.greville_points();
}

int nonzero_basis(const BSplineSpace& space, double x, double* values) {
  check_point(x);
  const KnotVector& kv = space.knots();
  const int p = kv.degree();
  const int s = locate_span(kv, x);
  // de Boor triangle: values[j] = N_{s-p+j}^p(x).
  values[0] = 1.0;
  std::vector<double> left(static_cast<size_t>(p + 1));
  std::vector<double> right(static_cast<size_t>(p + 1));
  for (int k = 1; k <= p; ++k) {
    left[static_cast<size_t>(k)] = x - kv.knot(s + 1 - k);
    right[static_cast<size_t>(k)] = kv.knot(s + k) - x;
    double saved = 0.0;
    for (int r = 0; r < k; ++r) {
      const double denom = right[static_cast<size_t>(r + 1)] + left[static_cast<size_t>(k - r)];
      const double tmp = denom != 0.0 ? values[r] / denom : 0.0;
      values[r] = saved + right[static_cast<size_t>(r + 1)] * tmp;
      saved = left[static_cast<size_t>(k - r)] * tmp;
    }
    values[k] = saved;
  }
  return s - p;
}

double eval_spline(const BSplineSpace& space, const std::vector<double>& coeffs,
                   double x) {
  const int p = space.degree();
  double vals[16];
  const int first = nonzero_basis(space, x, vals);
  double acc = 0.0;
  for (int j = 0; j <= p; ++j) {
    const int basis = first + j;          // 1-based basis index
    const int trimmed = basis - 2;        // position in the trimmed vector
    if (trimmed < 0 || trimmed >= static_cast<int>(coeffs.size())) continue;
    acc += coeffs[static_cast<size_t>(trimmed)] * vals[j];
  }
  return acc;
}

} // namespace fraccolloc
