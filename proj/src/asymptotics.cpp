#include "fide/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "fide/trajectory.hpp"

namespace fide {
namespace {

// ||f(t_i + omega) - f(t_i)|| for i = 0 .. n-1-shift
std::vector<double> shifted_differences(const SampledFunction& f,
                                        std::size_t shift) {
  const std::size_t n = f.nodes();
  if (shift >= n) {
    throw std::invalid_argument("horizon too short for the requested omega");
  }
  std::vector<double> d(n - shift);
  for (std::size_t i = 0; i < d.size(); ++i) {
    double m = 0.0;
    const auto a = f.value(i);
    const auto b = f.value(i + shift);
    for (std::size_t c = 0; c < f.dim; ++c) {
      m = std::max(m, std::fabs(b[c] - a[c]));
    }
    d[i] = m;
  }
  return d;
}

// sliding-window maximum of d over trailing windows of `window` steps
// (out[i] = max d[i-window .. i], defined for i >= window)
std::vector<double> trailing_window_max(const std::vector<double>& d,
                                        std::size_t window) {
  std::vector<double> out(d.size(), 0.0);
  std::deque<std::size_t> q;  // indices of decreasing d
  for (std::size_t i = 0; i < d.size(); ++i) {
    while (!q.empty() && d[q.back()] <= d[i]) q.pop_back();
    q.push_back(i);
    if (q.front() + window < i) q.pop_front();
    out[i] = d[q.front()];
  }
  return out;
}

double trapezoid(const std::vector<double>& v, std::size_t from, std::size_t to,
                 double h) {
  if (to <= from) return 0.0;
  double s = 0.5 * (v[from] + v[to]);
  for (std::size_t i = from + 1; i < to; ++i) s += v[i];
  return s * h;
}

}  // namespace

double SampledFunction::norm_at(std::size_t i) const {
  double m = 0.0;
  const auto v = value(i);
  for (std::size_t c = 0; c < dim; ++c) m = std::max(m, std::fabs(v[c]));
  return m;
}

double SampledFunction::sup_norm() const {
  double m = 0.0;
  for (std::size_t i = 0; i < nodes(); ++i) m = std::max(m, norm_at(i));
  return m;
}

SampledFunction SampledFunction::from_scalar(double t0, double step,
                                             std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("sampled function: empty");
  return SampledFunction{t0, step, 1, std::move(values)};
}

SampledFunction SampledFunction::sample(double t0, double step,
                                        std::size_t nodes,
                                        const std::function<double(double)>& f) {
  std::vector<double> v(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    v[i] = f(t0 + static_cast<double>(i) * step);
  }
  return from_scalar(t0, step, std::move(v));
}

SampledFunction SampledFunction::from_trajectory(const Trajectory& u,
                                                 double from_t) {
  const std::size_t start = u.grid().index_of(from_t);
  SampledFunction f;
  f.t0 = from_t;
  f.step = u.grid().step;
  f.dim = u.dim();
  f.data.assign(u.raw().begin() + start * u.dim(), u.raw().end());
  return f;
}

std::size_t SampledFunction::steps_of(double duration, const char* what) const {
  const double q = duration / step;
  const double rounded = std::round(q);
  if (rounded < 0.0 || std::fabs(q - rounded) > 1e-6 * std::max(1.0, rounded)) {
    std::ostringstream os;
    os << what << " = " << duration << " is not on the sampling grid (step "
       << step << ")";
    throw std::invalid_argument(os.str());
  }
  return static_cast<std::size_t>(rounded);
}

double sap_tail(const SampledFunction& f, double omega) {
  const std::size_t shift = f.steps_of(omega, "omega");
  if (!(omega > 0.0) || shift == 0) {
    throw std::invalid_argument("sap_tail: omega must be a positive grid multiple");
  }
  const double T = f.duration();
  if (!(0.9 * T >= omega)) {
    throw std::invalid_argument("sap_tail: horizon too short (need omega <= 0.9 T)");
  }
  const auto d = shifted_differences(f, shift);
  // sup over the last 10% of [0, T - omega]
  const std::size_t last = d.size() - 1;
  std::size_t from = static_cast<std::size_t>(
      std::ceil(0.9 * static_cast<double>(last) - 1e-9));
  double m = 0.0;
  for (std::size_t i = from; i <= last; ++i) m = std::max(m, d[i]);
  return m;
}

double psap_mean(const SampledFunction& f, double omega, double T) {
  const std::size_t shift = f.steps_of(omega, "omega");
  const std::size_t span = f.steps_of(T, "T");
  if (span == 0) throw std::invalid_argument("psap_mean: T must be positive");
  if (span + shift >= f.nodes()) {
    throw std::invalid_argument("psap_mean: horizon must cover T + omega");
  }
  const auto d = shifted_differences(f, shift);
  return trapezoid(d, 0, span, f.step) / T;
}

double class_r_mean(const SampledFunction& f, double omega, double r, double T) {
  const std::size_t shift = f.steps_of(omega, "omega");
  const std::size_t window = f.steps_of(r, "r");
  const std::size_t span = f.steps_of(T, "T");
  if (window == 0) throw std::invalid_argument("class_r_mean: r must be positive");
  if (span < window) {
    throw std::invalid_argument("class_r_mean: need T >= r");
  }
  if (span + shift >= f.nodes()) {
    throw std::invalid_argument("class_r_mean: horizon must cover T + omega");
  }
  const auto d = shifted_differences(f, shift);
  const auto w = trailing_window_max(d, window);
  return trapezoid(w, window, span, f.step) / T;
}

double ergodic_set_measure(const SampledFunction& f, double omega, double r,
                           double eps, double T) {
  if (!(eps > 0.0)) throw std::invalid_argument("ergodic measure: eps must be > 0");
  const std::size_t shift = f.steps_of(omega, "omega");
  const std::size_t window = f.steps_of(r, "r");
  const std::size_t span = f.steps_of(T, "T");
  if (window == 0 || span < window) {
    throw std::invalid_argument("ergodic measure: need 0 < r <= T on the grid");
  }
  if (span + shift >= f.nodes()) {
    throw std::invalid_argument("ergodic measure: horizon must cover T + omega");
  }
  const auto d = shifted_differences(f, shift);
  const auto w = trailing_window_max(d, window);
  // cells [t_i, t_{i+1}] of [r, T], counted by their left node
  std::size_t count = 0;
  for (std::size_t i = window; i < span; ++i) {
    if (w[i] >= eps) ++count;
  }
  return static_cast<double>(count) * f.step / T;
}

double stepanov_norm(const SampledFunction& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("stepanov norm: p must be >= 1");
  const std::size_t window = f.steps_of(1.0, "unit window");
  if (window == 0 || window >= f.nodes()) {
    throw std::invalid_argument("stepanov norm: horizon must be >= 1");
  }
  std::vector<double> povers(f.nodes());
  for (std::size_t i = 0; i < f.nodes(); ++i) {
    povers[i] = std::pow(f.norm_at(i), p);
  }
  // rolling trapezoid over [t_i, t_i + 1]
  double acc = 0.5 * (povers[0] + povers[window]);
  for (std::size_t i = 1; i < window; ++i) acc += povers[i];
  double best = acc;
  for (std::size_t i = 1; i + window < f.nodes(); ++i) {
    acc += 0.5 * (povers[i - 1 + window] + povers[i + window]) -
           0.5 * (povers[i - 1] + povers[i]);
    best = std::max(best, acc);
  }
  return std::pow(best * f.step, 1.0 / p);
}

namespace {

bool decays(const CheckpointCurve& curve, double abs_threshold,
            double decay_ratio) {
  if (curve.empty()) return false;
  const double first = curve.front().second;
  const double final = curve.back().second;
  bool non_increasing = true;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve[i].second > curve[i - 1].second * 1.05 + 1e-15) {
      non_increasing = false;
    }
  }
  if (final <= abs_threshold) return true;
  return non_increasing && final <= decay_ratio * first;
}

}  // namespace

PeriodicityReport classify(const SampledFunction& f, double omega, double r,
                           double eps, const ClassifyThresholds& thresholds) {
  const std::size_t shift = f.steps_of(omega, "omega");
  if (shift + 1 >= f.nodes()) {
    throw std::invalid_argument("classify: horizon too short for omega");
  }
  // diagnostics run up to T_diag = duration - omega, checkpoints at quarters
  const std::size_t diag_span = f.nodes() - 1 - shift;
  const std::size_t window = f.steps_of(r, "r");
  if (window == 0 || 4 * window > diag_span) {
    throw std::invalid_argument("classify: need r on-grid with r <= T/4");
  }

  PeriodicityReport report;
  report.omega = omega;
  report.r = r;
  report.eps = eps;
  report.sap_tail = sap_tail(f, omega);

  for (int quarter = 1; quarter <= 4; ++quarter) {
    const std::size_t span = diag_span * quarter / 4;
    const double T = static_cast<double>(span) * f.step;
    report.psap_mean_curve.emplace_back(T, psap_mean(f, omega, T));
    report.class_r_mean_curve.emplace_back(T, class_r_mean(f, omega, r, T));
    report.ergodic_measure_curve.emplace_back(
        T, ergodic_set_measure(f, omega, r, eps, T));
  }

  report.sap = {report.sap_tail <= thresholds.sap_abs, thresholds.sap_abs};
  report.psap = {decays(report.psap_mean_curve, thresholds.mean_abs,
                        thresholds.decay_ratio),
                 thresholds.mean_abs};
  report.class_r = {decays(report.class_r_mean_curve, thresholds.mean_abs,
                           thresholds.decay_ratio),
                    thresholds.mean_abs};
  // embedding chain: SAP => class r => PSAP
  if (report.sap.verdict) report.class_r.verdict = true;
  if (report.class_r.verdict) report.psap.verdict = true;
  return report;
}

namespace {

void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void append_curve(std::string& out, const CheckpointCurve& curve) {
  out += '[';
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    append_number(out, curve[i].first);
    out += ',';
    append_number(out, curve[i].second);
    out += ']';
  }
  out += ']';
}

void append_verdict(std::string& out, const char* name, const SpaceVerdict& v,
                    bool last = false) {
  out += "    \"";
  out += name;
  out += "\": {\"verdict\": ";
  out += v.verdict ? "true" : "false";
  out += ", \"threshold\": ";
  append_number(out, v.threshold);
  out += last ? "}\n" : "},\n";
}

}  // namespace

std::string report_to_json(const PeriodicityReport& r) {
  std::string out = "{\n  \"omega\": ";
  append_number(out, r.omega);
  out += ",\n  \"r\": ";
  append_number(out, r.r);
  out += ",\n  \"eps\": ";
  append_number(out, r.eps);
  out += ",\n  \"sap_tail\": ";
  append_number(out, r.sap_tail);
  out += ",\n  \"psap_mean_curve\": ";
  append_curve(out, r.psap_mean_curve);
  out += ",\n  \"class_r_mean_curve\": ";
  append_curve(out, r.class_r_mean_curve);
  out += ",\n  \"ergodic_measure_curve\": ";
  append_curve(out, r.ergodic_measure_curve);
  out += ",\n  \"verdicts\": {\n";
  append_verdict(out, "sap", r.sap);
  append_verdict(out, "psap", r.psap);
  append_verdict(out, "class_r", r.class_r, true);
  out += "  }\n}\n";
  return out;
}

}  // namespace fide
