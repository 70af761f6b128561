#pragma once

#include <functional>

namespace fide {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
/// Subdivides the interval with the worst local error estimate until the
/// total estimate drops below abs_tol + rel_tol*|value|.
QuadratureResult adaptive_gauss_kronrod(const std::function<double(double)>& f,
                                        double a, double b, double abs_tol,
                                        double rel_tol = 0.0,
                                        int max_intervals = 2000);

}  // namespace fide
