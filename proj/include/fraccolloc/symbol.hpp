#pragma once

#include <vector>

namespace fraccolloc {

/// Hurwitz zeta(s, a) = sum_{k>=0} (k+a)^{-s} for s > 1, a > 0, by
/// Euler-Maclaurin with a certified remainder far below 1e-15 relative.
double hurwitz_zeta(double s, double a);
/// Same with an explicit count of directly summed terms.
double hurwitz_zeta_n(double s, double a, int n);

/// Evaluator for the collocation spectral symbol
///   f(theta) = sum_l |theta + 2 l pi|^alpha (sin(theta/2 + l pi)/(theta/2 + l pi))^{p+1}
/// on [0, pi] (the function is even, so this covers [-pi, pi]). The l = 0
/// term is evaluated directly; the lattice tail collapses to Hurwitz zeta
/// values, which keeps the certified truncation error below ~1e-15 even for
/// small p where the raw terms decay too slowly to sum directly.
/// Immutable after construction.
class SymbolEvaluator {
 public:
  /// Requires 0 <= alpha <= 2 and p > alpha. series_terms is the number of
  /// directly summed zeta terms before the Euler-Maclaurin correction.
  SymbolEvaluator(int p, double alpha, int series_terms = 24);

  int degree() const { return p_; }
  double alpha() const { return alpha_; }
  int truncation_level() const { return series_terms_; }
  /// Bound on the neglected series remainder, relative to the value scale.
  double tail_bound() const { return tail_bound_; }
  /// max over [0, pi] of the symbol (scan plus golden-section refinement).
  double max_value() const { return max_value_; }

  double operator()(double theta) const;

 private:
  int p_;
  double alpha_;
  int series_terms_;
  double tail_bound_;
  double max_value_;
};

inline double symbol_eval(const SymbolEvaluator& ev, double theta) {
  return ev(theta);
}

/// Grid evaluation, OpenMP over the points, and the plain serial reference.
std::vector<double> sample_symbol(const SymbolEvaluator& ev,
                                  const std::vector<double>& thetas);
std::vector<double> sample_symbol_serial(const SymbolEvaluator& ev,
                                         const std::vector<double>& thetas);

/// Least-squares slope of log f versus log theta over [1e-4, 1e-2]; the
/// estimated order of the zero at theta = 0.
double zero_order_fit(const SymbolEvaluator& ev);

struct SandwichReport {
  bool lower_ok;              // |theta|^alpha sinc^{p+1} <= f pointwise
  double worst_lower_margin;  // min over the grid of f - lower bound
  double empirical_constant;  // max of (f - lower) / sin(theta/2)^{p+1}
};

/// Pointwise check of the two-sided envelope; the upper-bound constant is
/// not explicit in closed form, so the empirical one is reported.
SandwichReport sandwich_check(const SymbolEvaluator& ev,
                              const std::vector<double>& grid);

struct DecayRatio {
  double ratio;             // f(pi) / f(pi/2)
  double bound;             // 2^{(2 alpha + 1 - p)/2}
  double normalized_ratio;  // f(pi) / max f
  bool ok;
};

/// High-frequency decay bound at pi.
DecayRatio decay_ratio_check(const SymbolEvaluator& ev);

/// For odd p: f^{p,0} <= f^{p,alpha} <= f^{p,2} pointwise on the grid
/// (grid contained in [1, pi]).
bool odd_degree_bound_check(int p, double alpha, const std::vector<double>& grid);

struct EvenBoundReport {
  double a;             // (pi^4/48)^{1/alpha}
  bool holds_above_a;   // f^{p,0} <= f^{p,alpha} on [a, pi]
  bool holds_from_one;  // observed (not guaranteed) on [1, a]
};

/// For even p > alpha: lower bound by f^{p,0} above the threshold a, plus
/// the observed behaviour on [1, a].
EvenBoundReport even_degree_bound_check(int p, double alpha, int grid_points);

/// The alternating lattice tail
///   r(theta) = sum_{k>=1} (-1)^k [(2 k pi + theta)^{-(p+1-alpha)}
///                                 - (2 k pi - theta)^{-(p+1-alpha)}],
/// evaluated by convergence acceleration for alternating series with a
/// certified remainder <= 1e-14. For even p,
///   f = |theta|^alpha sinc(theta/2)^{p+1} + (2 sin(theta/2))^{p+1} r.
double symbol_tail_series(int p, double alpha, double theta);

/// Toeplitz-coefficient route: the symbol's Fourier coefficients from the
/// cardinal fractional derivatives. Independent cross-check of the
/// evaluator (and of the matrix first column).
std::vector<double> toeplitz_symbol_coefficients(int p, double alpha, int count);

/// t_0 + 2 sum_k t_k cos(k theta) over the supplied coefficients.
double fourier_route_eval(const std::vector<double>& coeffs, double theta);

/// Coefficient count so the Fourier partial sum is accurate to `tol` for
/// theta >= theta_min (the cusp at 0 slows pointwise convergence).
int fourier_route_terms(double alpha, double theta_min, double tol);

} // namespace fraccolloc
