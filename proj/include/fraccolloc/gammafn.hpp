#pragma once

namespace fraccolloc {

/// Gamma function via the Lanczos approximation (g = 7, 9 coefficients),
/// with the reflection formula for arguments below 1/2. Relative error is
/// below 1e-13 on the ranges used by this library. Poles at non-positive
/// integers return +/-infinity.
double gamma_fn(double x);

/// 1/Gamma(x), finite everywhere; exactly 0 at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

/// Binomial coefficient C(n, k) as a double (n up to ~60).
double binomial(int n, int k);

} // namespace fraccolloc
