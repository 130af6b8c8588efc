#pragma once

#include <vector>

namespace fraccolloc {

/// Open uniform knot vector on [0,1]: p+1 coincident knots at each end and
/// interior knots i/n. Knots use the classical 1-based indexing
/// xi_1 .. xi_{2p+n+1}.
class KnotVector {
 public:
  KnotVector(int degree, int intervals);

  int degree() const { return p_; }
  int intervals() const { return n_; }
  int count() const { return static_cast<int>(knots_.size()); }

  /// xi_i for i = 1 .. 2p+n+1.
  double knot(int i) const { return knots_[static_cast<size_t>(i - 1)]; }
  const std::vector<double>& knots() const { return knots_; }

 private:
  int p_;
  int n_;
  std::vector<double> knots_;
};

/// B-spline space of degree p on the uniform mesh of [0,1] with n intervals.
/// Basis functions N_i^p carry the 1-based index i = 1..n+p; the trimmed
/// space that vanishes at the boundary keeps i = 2..n+p-1 and is collocated
/// at the Greville abscissae eta_i. Immutable after construction.
class BSplineSpace {
 public:
  BSplineSpace(int degree, int intervals);

  const KnotVector& knots() const { return kv_; }
  int degree() const { return kv_.degree(); }
  int intervals() const { return kv_.intervals(); }
  int dimension() const { return kv_.intervals() + kv_.degree(); }
  int trimmed_dimension() const { return dimension() - 2; }

  /// eta_i = (xi_{i+1} + ... + xi_{i+p}) / p for i = 2..n+p-1.
  double greville(int i) const { return greville_[static_cast<size_t>(i - 2)]; }
  /// All trimmed-space collocation points, eta_2 .. eta_{n+p-1}.
  const std::vector<double>& greville_points() const { return greville_; }

 private:
  KnotVector kv_;
  std::vector<double> greville_;
};

/// Piecewise polynomial in the local monomial basis: on [b_k, b_{k+1}] the
/// value is sum_m coeffs[k][m] * (x - b_k)^m. Universal exact carrier for
/// splines and their derivatives.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial(std::vector<double> breakpoints,
                      std::vector<std::vector<double>> coeffs);

  const std::vector<double>& breakpoints() const { return breaks_; }
  const std::vector<std::vector<double>>& coefficients() const { return coeffs_; }
  double domain_left() const { return breaks_.front(); }
  double domain_right() const { return breaks_.back(); }
  int intervals() const { return static_cast<int>(coeffs_.size()); }

  /// Value at x; throws std::domain_error outside [domain_left, domain_right].
  double eval(double x) const;

  /// Exact derivative, interval by interval.
  PiecewisePolynomial derivative() const;

  /// The exact reflection y -> f(c - y) on [c - domain_right, c - domain_left].
  PiecewisePolynomial reflected(double c) const;

 private:
  std::vector<double> breaks_;
  std::vector<std::vector<double>> coeffs_;
};

/// Cox-de Boor value of N_i^p(x), i = 1..n+p, x in [0,1]. The last knot
/// span is treated as closed so that N_{n+p}^p(1) = 1 and the partition of
/// unity holds on the closed interval.
double eval_bspline(const BSplineSpace& space, int i, double x);

/// Derivative of N_i^p at x via the degree-lowering formula, applied
/// recursively. order must be in 1..p.
double eval_bspline_derivative(const BSplineSpace& space, int i, double x,
                               int order);

/// Cardinal B-spline phi_p(t): supported on [0, p+1], symmetric about
/// (p+1)/2, defined by the usual two-term recurrence.
double cardinal_bspline(int p, double t);

/// order-th derivative of phi_p, order <= p.
double cardinal_bspline_derivative(int p, double t, int order);

/// Exact polynomial coefficients of N_i^p on each knot span of its support.
/// Agrees with eval_bspline to ~1e-13 absolute.
PiecewisePolynomial to_piecewise(const BSplineSpace& space, int i);

/// Same as to_piecewise but padded with zero pieces so the domain is the
/// whole [0,1]; convenient for the fractional-derivative closed forms that
/// integrate from the domain boundary.
PiecewisePolynomial to_piecewise_full(const BSplineSpace& space, int i);

/// Exact polynomial pieces of phi_p on the integer spans [j, j+1] of [0, p+1].
PiecewisePolynomial cardinal_to_piecewise(int p);

/// The Greville abscissae eta_2 .. eta_{n+p-1}.
std::vector<double> greville_points(const BSplineSpace& space);

/// All degree+1 basis values that can be nonzero at x (de Boor triangle).
/// Returns the first 1-based basis index; values[j] = N_{first+j}^p(x).
int nonzero_basis(const BSplineSpace& space, double x, double* values);

/// Sum of trimmed-basis functions: coeffs[j] multiplies N_{j+2}^p,
/// j = 0..n+p-3.
double eval_spline(const BSplineSpace& space, const std::vector<double>& coeffs,
                   double x);

} // namespace fraccolloc
