#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fraccolloc/splines.hpp"

namespace fraccolloc {

/// Validated fractional order with cached Gamma values and the Riesz
/// prefactor 1/(2 cos(pi alpha / 2)). Two validation modes: the FDE solver
/// path requires alpha in (1,2) away from the alpha -> 1 prefactor
/// singularity; the symbol/identity paths accept the closed range [0,2].
class FractionalOrder {
 public:
  static FractionalOrder for_solver(double alpha);
  static FractionalOrder for_symbol(double alpha);

  double alpha() const { return alpha_; }
  double riesz_prefactor() const { return prefactor_; }

  /// Gamma(k - alpha + 1) for k = 0..kMaxShift.
  double gamma_shifted(int k) const { return gamma_[static_cast<size_t>(k)]; }
  /// 1/Gamma(-alpha); exactly 0 when alpha is a non-negative integer.
  double reciprocal_gamma_neg() const { return rgamma_neg_; }

  static constexpr int kMaxShift = 11;

 private:
  explicit FractionalOrder(double alpha);
  double alpha_;
  double prefactor_;
  double rgamma_neg_;
  std::vector<double> gamma_;
};

/// Value and first derivative of a function at the two domain endpoints,
/// the data entering the Riemann-Liouville <-> Caputo correction terms.
struct BoundaryData {
  double value_left = 0.0;   // u(a+)
  double deriv_left = 0.0;   // u'(a+)
  double value_right = 0.0;  // u(b-)
  double deriv_right = 0.0;  // u'(b-)
};

/// Left Riemann-Liouville (= Caputo) fractional derivative of the cardinal
/// B-spline phi_p at t, for 0 <= alpha < p. Zero for t <= 0. Uses the
/// truncated-power closed form near the support; past t = p+2 the
/// alternating sum cancels catastrophically, so the value is computed from
/// the equivalent B-spline-weighted integral of the power kernel.
double left_rl_cardinal(int p, const FractionalOrder& order, double t);

/// Right-sided counterpart; by the symmetry of phi_p this is the left value
/// at the reflected argument p+1-t.
double right_rl_cardinal(int p, const FractionalOrder& order, double t);

/// Left Caputo derivative (m = 2) of a piecewise polynomial at x, in closed
/// form: on each interval the second derivative is expanded in powers of
/// (x - y) and the kernel integrated analytically. No quadrature.
double caputo_left_piecewise(const PiecewisePolynomial& f,
                             const FractionalOrder& order, double x);

/// Right Caputo derivative (m = 2); mirror image of the left one.
double caputo_right_piecewise(const PiecewisePolynomial& f,
                              const FractionalOrder& order, double x);

/// Riemann-Liouville value from a Caputo value plus the m = 2 boundary
/// corrections at the left endpoint a.
double rl_left_from_caputo(double caputo_value, const BoundaryData& bdata,
                           const FractionalOrder& order, double x, double a);

/// Right-endpoint counterpart (signs (-1)^k on the corrections).
double rl_right_from_caputo(double caputo_value, const BoundaryData& bdata,
                            const FractionalOrder& order, double x, double b);

/// Nodes and weights of an n-point Gaussian rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch nodes/weights for the Jacobi weight (1-t)^a (1+t)^b on
/// [-1,1]; exact for polynomials up to degree 2*count-1.
QuadratureRule gauss_jacobi_rule(int count, double a, double b);

/// Verification oracle: integral of (hi-y)^{1-alpha} g(y) over [lo, hi] by
/// Gauss-Jacobi quadrature. Requires 1-alpha in (-1,1) and count >= 1.
double gauss_jacobi_oracle(const std::function<double(double)>& g, double alpha,
                           double lo, double hi, int count);

enum class Side { left, right };

/// Quadrature route for the Caputo derivative of a piecewise polynomial:
/// Gauss-Jacobi on the span containing the singularity, adaptive
/// Gauss-Legendre elsewhere. Independent cross-check of the closed-form
/// caputo_*_piecewise path.
double caputo_quadrature(const PiecewisePolynomial& f,
                         const FractionalOrder& order, double x, Side side,
                         double tol = 1e-10);

/// Both sides of the mixed inner-product identity for cardinal fractional
/// derivatives: lhs integrates D_left^{a1} phi_{p1}(x) * D_right^{a2}
/// phi_{p2}(x+k) by adaptive quadrature, rhs is the closed-form value
/// D_left^{a1+a2} phi_{p1+p2+1}(p2+1-k).
std::pair<double, double> inner_product_check(int p1, int p2, double alpha1,
                                              double alpha2, int k);

} // namespace fraccolloc
