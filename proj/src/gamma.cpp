#include "fide/gamma.hpp"

#include <cmath>
#include <limits>

namespace fide {
namespace {

// Lanczos shift g and 13-term rational coefficients for double precision
// (the classic g = 6.0247 set; numerator over the rising factorial
// z(z+1)...(z+11), coefficients in ascending degree).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kNum[13] = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

constexpr double kDen[13] = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,    66.0,       1.0,
};

// num(z)/den(z); for |z| > 1 evaluate in 1/z to avoid overflow.
double lanczos_sum(double z) {
  double num = 0.0;
  double den = 0.0;
  if (z <= 1.0) {
    for (int i = 12; i >= 0; --i) {
      num = num * z + kNum[i];
      den = den * z + kDen[i];
    }
  } else {
    const double s = 1.0 / z;
    for (int i = 0; i <= 12; ++i) {
      num = num * s + kNum[i];
      den = den * s + kDen[i];
    }
  }
  return num / den;
}

double gamma_positive(double x) {
  // One recurrence step keeps the Lanczos sum in its sweet spot.
  if (x < 0.5) return gamma_positive(x + 1.0) / x;
  const double t = x + kLanczosG - 0.5;
  if (x <= 100.0) {
    return lanczos_sum(x) * std::pow(t, x - 0.5) * std::exp(-t);
  }
  // t^(x-0.5) overflows long before Gamma itself does; fold e^{-t} into the
  // power ((t/e)^{(x-0.5)/2} squared, note t - (x-0.5) = g exactly).
  const double p = std::pow(t / M_E, 0.5 * (x - 0.5));
  return lanczos_sum(x) * p * p * std::exp(-kLanczosG);
}

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  // Reduce to |y| <= 0.5 with y = x - round(x); the reduction is exact in
  // floating point, so sin(pi*y) keeps full relative accuracy.
  const double n = std::round(x);
  const double y = x - n;
  const double s = std::sin(M_PI * y);
  return (std::fmod(n, 2.0) == 0.0) ? s : -s;
}

double gamma(double x) {
  if (std::isnan(x)) return x;
  if (x > 0.0) {
    if (x > 178.0) return std::numeric_limits<double>::infinity();
    return gamma_positive(x);
  }
  if (x == std::floor(x)) {
    // poles at 0, -1, -2, ...
    return std::numeric_limits<double>::infinity();
  }
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  return M_PI / (sin_pi(x) * gamma_positive(1.0 - x));
}

double log_gamma(double x) {
  if (x <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (x < 100.0) return std::log(gamma_positive(x));
  const double t = x + kLanczosG - 0.5;
  return std::log(lanczos_sum(x)) + (x - 0.5) * std::log(t) - t;
}

double reciprocal_gamma(double x) {
  if (x > 0.0) {
    if (x > 178.0) return 0.0;
    return 1.0 / gamma_positive(x);
  }
  if (x == std::floor(x)) return 0.0;
  // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi; Gamma(1-x) may overflow for
  // very negative x, in which case the reciprocal is +/-inf anyway --
  // callers in the asymptotic series keep 1-x modest.
  return sin_pi(x) * gamma_positive(1.0 - x) / M_PI;
}

}  // namespace fide
