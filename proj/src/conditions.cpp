#include "fide/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fide/spectrum.hpp"

namespace fide {

LipschitzModulus LipschitzModulus::constant_value(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("lipschitz modulus: constant must be >= 0");
  }
  LipschitzModulus m;
  m.is_constant = true;
  m.constant = c;
  return m;
}

LipschitzModulus LipschitzModulus::sampled(SampledFunction f) {
  if (f.dim != 1) {
    throw std::invalid_argument("lipschitz modulus: samples must be scalar");
  }
  for (double v : f.data) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("lipschitz modulus: samples must be >= 0");
    }
  }
  LipschitzModulus m;
  m.is_constant = false;
  m.samples = std::move(f);
  return m;
}

double LipschitzModulus::sup() const {
  if (is_constant) return constant;
  return samples.sup_norm();
}

double uniform_lipschitz_lhs(const LipschitzData& lip, double C, double M,
                             double mu, double alpha) {
  if (lip.f_kind == LipschitzKind::integrable) {
    throw std::invalid_argument(
        "uniform criterion needs a bounded or constant Lipschitz modulus");
  }
  return lip.g.sup() + lip.f.sup() * decay_integral(C, M, mu, alpha);
}

double convolution_lipschitz_lhs(const LipschitzData& lip, double C, double M,
                                 double mu, double alpha, double horizon,
                                 double step, bool literal_form) {
  if (!(horizon > 0.0) || !(step > 0.0) || !(horizon / step >= 1.0)) {
    throw std::invalid_argument("convolution criterion: empty time grid");
  }
  if (!(alpha > 1.0) || !(alpha < 2.0)) {
    throw std::invalid_argument("convolution criterion: alpha must be in (1,2)");
  }
  const std::size_t n = static_cast<std::size_t>(std::round(horizon / step));
  const double abs_mu = std::fabs(mu);
  const double front = literal_form ? 1.0 : C * M;

  if (!lip.f.is_constant) {
    // a sampled modulus must sit on the evaluation grid
    if (std::fabs(lip.f.samples.t0) > 1e-12 ||
        std::fabs(lip.f.samples.step - step) > 1e-12 * step) {
      throw std::invalid_argument(
          "convolution criterion: sampled L_f is not aligned with the grid");
    }
  }

  // L_f samples on the grid (extended by the last value if short)
  std::vector<double> lf(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (lip.f.is_constant) {
      lf[j] = lip.f.constant;
    } else {
      const std::size_t m = lip.f.samples.nodes();
      lf[j] = lip.f.samples.data[std::min(j, m - 1)];
    }
  }

  // kernel by lag, then W_f(t_i) by composite trapezoid; sup over the grid
  std::vector<double> kern(n + 1);
  kern[0] = 1.0;
  for (std::size_t l = 1; l <= n; ++l) {
    kern[l] = 1.0 / (1.0 + abs_mu * std::pow(static_cast<double>(l) * step, alpha));
  }
  double sup_w = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    double acc = 0.5 * (lf[0] * kern[i] + lf[i]);
    for (std::size_t j = 1; j < i; ++j) acc += lf[j] * kern[i - j];
    sup_w = std::max(sup_w, acc * step);
  }
  return front * sup_w + lip.g.sup();
}

double stepanov_lipschitz_lhs(const LipschitzData& lip, double C, double M,
                              double mu, double alpha) {
  const double factor =
      C * M *
      (1.0 + std::pow(std::fabs(mu), -1.0 / alpha) * M_PI /
                 (alpha * std::sin(M_PI / alpha)));
  double norm;
  if (lip.f.is_constant) {
    norm = lip.f.constant;  // unit-window L^p mean of a constant
  } else {
    norm = stepanov_norm(lip.f.samples, lip.stepanov_p);
  }
  return lip.g.sup() + factor * norm;
}

KernelLipschitz section4_lipschitz(double h_sup, double j_sup,
                                   std::span<const double> k_samples,
                                   std::span<const double> m_samples,
                                   double r) {
  if (!(h_sup >= 0.0) || !(j_sup >= 0.0)) {
    throw std::invalid_argument("kernel lipschitz: sup norms must be >= 0");
  }
  if (k_samples.size() < 2 || m_samples.size() < 2) {
    throw std::invalid_argument("kernel lipschitz: need >= 2 kernel samples");
  }
  if (!(r > 0.0)) throw std::invalid_argument("kernel lipschitz: r must be > 0");

  auto l2_over_delay = [r](std::span<const double> samples) {
    const double h = r / static_cast<double>(samples.size() - 1);
    double acc = 0.5 * (samples.front() * samples.front() +
                        samples.back() * samples.back());
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
      acc += samples[i] * samples[i];
    }
    return std::sqrt(acc * h);
  };
  const double root_r = std::sqrt(r);
  return {root_r * h_sup * l2_over_delay(k_samples),
          root_r * j_sup * l2_over_delay(m_samples)};
}

GuaranteeReport guarantee(const LipschitzData& lip, double C, double M,
                          double mu, double alpha, double horizon,
                          double step) {
  GuaranteeReport report;
  auto add = [&report](const std::string& name, double lhs) {
    report.checks.push_back({name, lhs, 1.0, lhs < 1.0});
  };

  const bool constant_data =
      lip.f_kind == LipschitzKind::constant && lip.g.is_constant;
  if (constant_data) {
    add("constant_lipschitz", uniform_lipschitz_lhs(lip, C, M, mu, alpha));
  }
  if (lip.f_kind == LipschitzKind::constant ||
      lip.f_kind == LipschitzKind::bounded) {
    add("bounded_lipschitz", uniform_lipschitz_lhs(lip, C, M, mu, alpha));
  }
  add("convolution_lipschitz",
      convolution_lipschitz_lhs(lip, C, M, mu, alpha, horizon, step));
  if (lip.f_kind == LipschitzKind::constant ||
      lip.f_kind == LipschitzKind::stepanov) {
    add("stepanov_lipschitz", stepanov_lipschitz_lhs(lip, C, M, mu, alpha));
  }

  double best_lhs = std::numeric_limits<double>::infinity();
  for (const auto& check : report.checks) {
    if (check.lhs < best_lhs - 1e-15) {
      best_lhs = check.lhs;
      if (check.satisfied) report.best = check.name;
    }
  }
  report.contraction_constant = best_lhs;
  if (!(best_lhs < 1.0)) report.best = "none";
  return report;
}

std::string report_to_json(const GuaranteeReport& report) {
  auto number = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  std::string out = "{\n  \"checks\": [\n";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    out += "    {\"name\": \"" + c.name + "\", \"lhs\": " + number(c.lhs) +
           ", \"threshold\": " + number(c.threshold) +
           ", \"satisfied\": " + (c.satisfied ? "true" : "false") + "}";
    out += (i + 1 < report.checks.size()) ? ",\n" : "\n";
  }
  out += "  ],\n  \"best\": \"" + report.best + "\",\n";
  out += "  \"contraction_constant\": " + number(report.contraction_constant) +
         "\n}\n";
  return out;
}

}  // namespace fide
