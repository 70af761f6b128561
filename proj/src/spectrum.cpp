#include "fide/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fide/mlf.hpp"

namespace fide {

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
  if (!(alpha >= 1.0) || !(alpha <= 2.0)) {
    std::ostringstream os;
    os << "fractional order " << alpha << " outside [1, 2]";
    throw std::invalid_argument(os.str());
  }
}

double FractionalOrder::decay_integral_factor() const {
  if (!strictly_fractional()) {
    throw std::domain_error("decay integral factor requires alpha in (1,2)");
  }
  return M_PI / (alpha_ * std::sin(M_PI / alpha_));
}

double FractionalOrder::sector_angle_bound() const {
  return M_PI * (1.0 - 0.5 * alpha_);
}

SectorialSpectrum SectorialSpectrum::from_eigenvalues(
    std::vector<double> eigenvalues, double C, double M) {
  if (eigenvalues.empty()) {
    throw std::invalid_argument("spectrum: eigenvalue list is empty");
  }
  for (double lambda : eigenvalues) {
    if (!(lambda < 0.0) || !std::isfinite(lambda)) {
      throw std::invalid_argument("spectrum: eigenvalues must be finite and < 0");
    }
  }
  if (!(C > 0.0) || !(M > 0.0)) {
    throw std::invalid_argument("spectrum: C and M must be positive");
  }
  SectorialSpectrum s;
  s.mu = *std::max_element(eigenvalues.begin(), eigenvalues.end());
  s.eigenvalues = std::move(eigenvalues);
  s.C = C;
  s.M = M;
  return s;
}

SectorialSpectrum SectorialSpectrum::dirichlet_modes(int modes, double damping,
                                                     double C, double M) {
  if (modes < 1) throw std::invalid_argument("spectrum: modes must be >= 1");
  if (!(damping > 0.0)) {
    throw std::invalid_argument("spectrum: damping must be > 0");
  }
  std::vector<double> ev(modes);
  for (int n = 1; n <= modes; ++n) {
    ev[n - 1] = -(static_cast<double>(n) * n + damping);
  }
  return from_eigenvalues(std::move(ev), C, M);
}

double state_sup_norm(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::fabs(v));
  return m;
}

namespace {

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    std::ostringstream os;
    os << "solution operator: t = " << t << " must be finite and >= 0";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

StateVector apply_solution_operator(const SectorialSpectrum& spectrum,
                                    const FractionalOrder& alpha, double t,
                                    std::span<const double> x) {
  check_time(t);
  if (x.size() != spectrum.dim()) {
    std::ostringstream os;
    os << "solution operator: state dimension " << x.size()
       << " != spectrum dimension " << spectrum.dim();
    throw std::invalid_argument(os.str());
  }
  StateVector out(x.begin(), x.end());
  if (t == 0.0) return out;  // S_alpha(0) = I
  const MlfParams params{alpha.value(), 1.0};
  const double ta = std::pow(t, alpha.value());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] *= mlf_eval(params, spectrum.eigenvalues[n] * ta);
  }
  return out;
}

double operator_norm(const SectorialSpectrum& spectrum,
                     const FractionalOrder& alpha, double t) {
  check_time(t);
  if (t == 0.0) return 1.0;
  const MlfParams params{alpha.value(), 1.0};
  const double ta = std::pow(t, alpha.value());
  double norm = 0.0;
  for (double lambda : spectrum.eigenvalues) {
    norm = std::max(norm, std::fabs(mlf_eval(params, lambda * ta)));
  }
  return norm;
}

double fit_decay_constant(const SectorialSpectrum& spectrum,
                          const FractionalOrder& alpha,
                          std::span<const double> t_grid) {
  if (t_grid.empty()) {
    throw std::invalid_argument("fit_decay_constant: empty time grid");
  }
  double c = 0.0;
  const double abs_mu = std::fabs(spectrum.mu);
  for (double t : t_grid) {
    check_time(t);
    const double bound = 1.0 + abs_mu * std::pow(t, alpha.value());
    c = std::max(c, operator_norm(spectrum, alpha, t) * bound);
  }
  return c;
}

double decay_integral(double C, double M, double mu, double alpha) {
  if (!(C > 0.0) || !(M > 0.0)) {
    throw std::invalid_argument("decay_integral: C, M must be positive");
  }
  if (!(mu < 0.0)) throw std::invalid_argument("decay_integral: mu must be < 0");
  if (!(alpha > 1.0) || !(alpha < 2.0)) {
    throw std::invalid_argument(
        "decay_integral: alpha must lie in (1,2); the integral diverges for "
        "alpha <= 1");
  }
  return C * M * std::pow(-mu, -1.0 / alpha) * M_PI /
         (alpha * std::sin(M_PI / alpha));
}

}  // namespace fide
