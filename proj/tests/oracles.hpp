// Test-only reference implementations, independent of the library paths they
// check: extended-precision (MPFR) series for the Mittag-Leffler function and
// the gamma function, plus a plain adaptive Simpson integrator.
#pragma once

#include <functional>

namespace oracle {

/// E_{alpha,beta}(z) summed term by term in MPFR arithmetic (precision picked
/// from |z|), accurate to far below 1e-20 absolute for |z| <= ~1e4.
double mlf_series_reference(double alpha, double beta, double z);

/// Gamma(x) via mpfr_gamma.
double gamma_reference(double x);

/// Recursive adaptive Simpson integration.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 60);

}  // namespace oracle
