#pragma once

#include <span>
#include <vector>

namespace fide {

/// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
/// The solver only ever uses beta = 1 with alpha in (1,2); alpha = 1 and
/// alpha = 2 are accepted so the exponential / cosine identities hold.
struct MlfParams {
  double alpha = 1.5;
  double beta = 1.0;
};

/// Throws std::invalid_argument unless alpha in (0,2] and beta > 0.
void validate(const MlfParams& params);

/// E_{alpha,beta}(z) for z <= 0.
///
/// Three evaluation regimes, switched on |z|:
///   |z| <= 6^alpha            power series (compensated summation)
///   6^alpha < |z| < 60^alpha  branch-cut integral + saddle-pair term (exact
///                             representation, adaptive quadrature)
///   |z| >= 60^alpha           saddle-pair term + optimally truncated
///                             algebraic expansion
/// Absolute error <= 1e-10 over |z| <= 1e6.
/// Throws std::domain_error for z > 0 or non-finite z.
double mlf_eval(const MlfParams& params, double z);

/// Elementwise mlf_eval; error messages name the offending index.
std::vector<double> mlf_eval_batch(const MlfParams& params,
                                   std::span<const double> zs);

/// The three single-regime evaluators, exposed for cross-checks. Each is
/// only accurate in its own regime (see mlf_eval); mlf_integral is an exact
/// representation valid for all z < 0 when alpha != 1.
double mlf_series(const MlfParams& params, double z);
double mlf_integral(const MlfParams& params, double z);
double mlf_asymptotic(const MlfParams& params, double z);

/// Regime boundaries used by mlf_eval.
double mlf_series_limit(double alpha);      // 6^alpha
double mlf_asymptotic_limit(double alpha);  // 60^alpha

}  // namespace fide
