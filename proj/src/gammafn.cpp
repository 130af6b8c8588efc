#include "fraccolloc/gammafn.hpp"

#include <cmath>

namespace fraccolloc {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_positive(double x) {
  // Valid for x >= 0.5.
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

} // namespace

double gamma_fn(double x) {
  if (x >= 0.5) return lanczos_positive(x);
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  return M_PI / (std::sin(M_PI * x) * lanczos_positive(1.0 - x));
}

double reciprocal_gamma(double x) {
  if (x >= 0.5) return 1.0 / lanczos_positive(x);
  if (x == std::floor(x)) return 0.0;  // poles at 0, -1, -2, ...
  return std::sin(M_PI * x) * lanczos_positive(1.0 - x) / M_PI;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * double(n - k + i) / double(i);
  return c;
}

} // namespace fraccolloc
