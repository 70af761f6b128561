#pragma once

namespace fide {

/// Gamma function for real arguments (Lanczos rational approximation,
/// g = 6.0247, 13 terms; reflection for x < 0.5). Relative error below
/// 1e-14 on the positive axis, +/-inf at the non-positive integer poles.
double gamma(double x);

/// Natural log of |Gamma(x)|, x > 0.
double log_gamma(double x);

/// 1/Gamma(x); exactly 0 at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

/// sin(pi*x) with exact argument reduction in x (no pi*x roundoff blowup).
double sin_pi(double x);

}  // namespace fide
