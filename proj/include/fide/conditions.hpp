#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fide/asymptotics.hpp"
#include "fide/grid.hpp"

namespace fide {

/// Lipschitz modulus of f or g in time: an exact constant or a sampled
/// non-negative function whose grid sup stands in for the C_b norm.
struct LipschitzModulus {
  bool is_constant = true;
  double constant = 0.0;
  SampledFunction samples;  // scalar, used when !is_constant

  static LipschitzModulus constant_value(double c);
  static LipschitzModulus sampled(SampledFunction f);

  double sup() const;
  double at(std::size_t i) const {
    return is_constant ? constant : samples.data[i];
  }
};

/// Hypothesis class of the Lipschitz data for f; g is always a bounded
/// modulus. The tag decides which existence criteria apply.
enum class LipschitzKind {
  constant,    // both moduli constant
  bounded,     // bounded function of time
  integrable,  // locally integrable modulus (convolution criterion only)
  stepanov,    // Stepanov-bounded modulus with exponent p
};

struct LipschitzData {
  LipschitzModulus g;
  LipschitzModulus f;
  LipschitzKind f_kind = LipschitzKind::constant;
  double stepanov_p = 1.0;
};

/// sup|Lg| + sup|Lf| * decay_integral(C, M, mu, alpha)  (uniform criterion).
double uniform_lipschitz_lhs(const LipschitzData& lip, double C, double M,
                             double mu, double alpha);

/// sup_t W_f(t) + sup|Lg| with W_f(t) the trapezoid value of
/// C M int_0^t L_f(s)/(1+|mu|(t-s)^alpha) ds over the grid [0,T] (the
/// convolution criterion). `literal_form` drops the C M factor, matching the
/// display rather than the proof estimate.
double convolution_lipschitz_lhs(const LipschitzData& lip, double C, double M,
                                 double mu, double alpha, double horizon,
                                 double step, bool literal_form = false);

/// sup|Lg| + C M (1 + |mu|^{-1/alpha} pi/(alpha sin(pi/alpha))) ||L_f||_{S^p}
/// (the Stepanov criterion).
double stepanov_lipschitz_lhs(const LipschitzData& lip, double C, double M,
                              double mu, double alpha);

/// Lipschitz constants of the delay-kernel forcing forms
///   g(t,psi) = h(t) int_{-r}^0 k(s) psi(s) ds   (and f with j, m):
///   L_g = r^{1/2} sup|h| (int_{-r}^0 k^2)^{1/2}, likewise L_f.
/// Kernel integrals by trapezoid over the supplied samples on [-r, 0].
struct KernelLipschitz {
  double Lg = 0.0;
  double Lf = 0.0;
};
KernelLipschitz section4_lipschitz(double h_sup, double j_sup,
                                   std::span<const double> k_samples,
                                   std::span<const double> m_samples, double r);

struct GuaranteeCheck {
  std::string name;  // constant_ | bounded_ | convolution_ | stepanov_lipschitz
  double lhs = 0.0;
  double threshold = 1.0;
  bool satisfied = false;
};

struct GuaranteeReport {
  std::vector<GuaranteeCheck> checks;
  std::string best = "none";
  double contraction_constant = 0.0;  // min applicable LHS
};

/// Evaluates every criterion applicable to the data's hypothesis class;
/// "best" names the smallest satisfied LHS (ties toward the constant
/// criterion), contraction_constant is the minimal applicable LHS.
GuaranteeReport guarantee(const LipschitzData& lip, double C, double M,
                          double mu, double alpha, double horizon, double step);

std::string report_to_json(const GuaranteeReport& report);

}  // namespace fide
