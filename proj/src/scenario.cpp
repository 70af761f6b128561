#include "fide/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fide/asymptotics.hpp"
#include "fide/conditions.hpp"

namespace fide {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void config_error(const std::string& message) {
  throw std::invalid_argument("config: " + message);
}

double require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    config_error(std::string(name) + " must be positive");
  }
  return v;
}

}  // namespace

double TimeFunctionSpec::evaluate(double t) const {
  if (form == "constant") return value;
  if (form == "one_plus_sin") {
    return amplitude * (1.0 + std::sin(2.0 * M_PI * t / period));
  }
  config_error("time function form '" + form + "' has no closed form");
}

double TimeFunctionSpec::sup() const {
  if (form == "constant") return std::fabs(value);
  if (form == "one_plus_sin") return 2.0 * amplitude;
  if (form == "samples") {
    double m = 0.0;
    for (double v : samples) m = std::max(m, std::fabs(v));
    return m;
  }
  config_error("unknown time function form '" + form + "'");
}

std::vector<double> KernelSpec::sample_grid(double delay,
                                            std::size_t count) const {
  std::vector<double> out(count);
  if (form == "constant") {
    std::fill(out.begin(), out.end(), value);
  } else if (form == "exp") {
    for (std::size_t i = 0; i < count; ++i) {
      const double theta =
          -delay + delay * static_cast<double>(i) / static_cast<double>(count - 1);
      out[i] = scale * std::exp(theta);
    }
  } else if (form == "samples") {
    if (samples.size() != count) {
      std::ostringstream os;
      os << "kernel needs " << count << " samples on [-r, 0], got "
         << samples.size();
      config_error(os.str());
    }
    out = samples;
  } else {
    config_error("unknown kernel form '" + form + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON (de)serialization

namespace {

ordered_json time_fn_to_json(const TimeFunctionSpec& s) {
  ordered_json j;
  j["form"] = s.form;
  if (s.form == "constant") j["value"] = s.value;
  if (s.form == "one_plus_sin") {
    j["amplitude"] = s.amplitude;
    j["period"] = s.period;
  }
  if (s.form == "samples") j["values"] = s.samples;
  return j;
}

TimeFunctionSpec time_fn_from_json(const ordered_json& j) {
  TimeFunctionSpec s;
  s.form = j.at("form").get<std::string>();
  if (s.form == "constant") {
    s.value = j.at("value").get<double>();
  } else if (s.form == "one_plus_sin") {
    s.amplitude = j.at("amplitude").get<double>();
    s.period = j.at("period").get<double>();
    if (s.amplitude < 0.0) config_error("one_plus_sin amplitude must be >= 0");
    require_positive(s.period, "one_plus_sin period");
  } else if (s.form == "samples") {
    s.samples = j.at("values").get<std::vector<double>>();
  } else {
    config_error("unknown time function form '" + s.form + "'");
  }
  return s;
}

ordered_json kernel_to_json(const KernelSpec& s) {
  ordered_json j;
  j["form"] = s.form;
  if (s.form == "constant") j["value"] = s.value;
  if (s.form == "exp") j["scale"] = s.scale;
  if (s.form == "samples") j["values"] = s.samples;
  return j;
}

KernelSpec kernel_from_json(const ordered_json& j) {
  KernelSpec s;
  s.form = j.at("form").get<std::string>();
  if (s.form == "constant") {
    s.value = j.at("value").get<double>();
  } else if (s.form == "exp") {
    s.scale = j.value("scale", 1.0);
  } else if (s.form == "samples") {
    s.samples = j.at("values").get<std::vector<double>>();
  } else {
    config_error("unknown kernel form '" + s.form + "'");
  }
  return s;
}

ordered_json forcing_to_json(const ForcingSpec& s) {
  ordered_json j;
  j["form"] = s.form;
  if (s.form == "constant") j["value"] = s.constant_value;
  if (s.form == "linear") {
    j["g_matrix"] = s.g_matrix;
    j["g_lag"] = s.g_lag;
    j["f_matrix"] = s.f_matrix;
    j["f_lag"] = s.f_lag;
  }
  if (s.form == "section4") {
    j["h"] = time_fn_to_json(s.h);
    j["k"] = kernel_to_json(s.k);
    j["j"] = time_fn_to_json(s.j);
    j["m"] = kernel_to_json(s.m);
  }
  return j;
}

ForcingSpec forcing_from_json(const ordered_json& j) {
  ForcingSpec s;
  s.form = j.at("form").get<std::string>();
  if (s.form == "zero") {
  } else if (s.form == "constant") {
    s.constant_value = j.at("value").get<std::vector<double>>();
  } else if (s.form == "linear") {
    s.g_matrix = j.at("g_matrix").get<std::vector<std::vector<double>>>();
    s.f_matrix = j.at("f_matrix").get<std::vector<std::vector<double>>>();
    s.g_lag = j.value("g_lag", 0.0);
    s.f_lag = j.value("f_lag", 0.0);
  } else if (s.form == "section4") {
    s.h = time_fn_from_json(j.at("h"));
    s.k = kernel_from_json(j.at("k"));
    s.j = time_fn_from_json(j.at("j"));
    s.m = kernel_from_json(j.at("m"));
  } else {
    config_error("unknown forcing form '" + s.form + "'");
  }
  return s;
}

ordered_json history_to_json(const HistorySpec& s) {
  ordered_json j;
  j["form"] = s.form;
  if (s.form == "constant") j["values"] = s.values;
  if (s.form == "decaying_modes") j["scale"] = s.scale;
  if (s.form == "samples") j["values"] = s.samples;
  return j;
}

HistorySpec history_from_json(const ordered_json& j) {
  HistorySpec s;
  s.form = j.at("form").get<std::string>();
  if (s.form == "constant") {
    s.values = j.at("values").get<std::vector<double>>();
  } else if (s.form == "decaying_modes") {
    s.scale = j.value("scale", 1.0);
  } else if (s.form == "samples") {
    s.samples = j.at("values").get<std::vector<double>>();
  } else {
    config_error("unknown history form '" + s.form + "'");
  }
  return s;
}

ordered_json config_to_json(const ScenarioConfig& c) {
  ordered_json j;
  j["alpha"] = c.alpha;
  ordered_json spec;
  spec["modes"] = c.modes;
  spec["damping"] = c.damping;
  if (c.C) spec["C"] = *c.C;
  spec["M"] = c.M;
  j["spectrum"] = spec;
  j["delay"] = c.delay;
  j["horizon"] = c.horizon;
  j["step"] = c.step;
  j["omega"] = c.omega;
  j["eps"] = c.eps;
  j["tolerance"] = c.tolerance;
  j["max_iter"] = c.max_iter;
  j["forcing"] = forcing_to_json(c.forcing);
  j["history"] = history_to_json(c.history);
  return j;
}

ScenarioConfig config_from_json(const ordered_json& j) {
  ScenarioConfig c;
  try {
    c.alpha = j.at("alpha").get<double>();
    const auto& spec = j.at("spectrum");
    c.modes = spec.at("modes").get<int>();
    c.damping = spec.at("damping").get<double>();
    if (spec.contains("C")) c.C = spec.at("C").get<double>();
    c.M = spec.value("M", 1.0);
    c.delay = j.at("delay").get<double>();
    c.horizon = j.at("horizon").get<double>();
    c.step = j.at("step").get<double>();
    c.omega = j.at("omega").get<double>();
    c.eps = j.at("eps").get<double>();
    c.tolerance = j.at("tolerance").get<double>();
    c.max_iter = j.at("max_iter").get<int>();
    c.forcing = forcing_from_json(j.at("forcing"));
    c.history = history_from_json(j.at("history"));
  } catch (const nlohmann::json::exception& e) {
    config_error(e.what());
  }
  return c;
}

}  // namespace

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) config_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << f.rdbuf();
  return config_from_json_text(buffer.str());
}

ScenarioConfig config_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    config_error(std::string("not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

std::string config_to_json_text(const ScenarioConfig& config) {
  return config_to_json(config).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// building

namespace {

std::function<double(double)> make_time_fn(const TimeFunctionSpec& spec,
                                           const TimeGrid& grid) {
  if (spec.form == "samples") {
    if (spec.samples.size() < grid.positive_nodes()) {
      config_error("sampled time function shorter than the solve grid");
    }
    const std::vector<double> samples = spec.samples;
    const double step = grid.step;
    return [samples, step](double t) {
      const auto i = static_cast<std::size_t>(std::llround(t / step));
      return samples[std::min(i, samples.size() - 1)];
    };
  }
  const TimeFunctionSpec copy = spec;
  copy.evaluate(0.0);  // validates the form name
  return [copy](double t) { return copy.evaluate(t); };
}

void check_matrix(const std::vector<std::vector<double>>& m, std::size_t dim,
                  const char* name) {
  if (m.size() != dim) config_error(std::string(name) + " must be N x N");
  for (const auto& row : m) {
    if (row.size() != dim) config_error(std::string(name) + " must be N x N");
    for (double v : row) {
      if (!std::isfinite(v)) config_error(std::string(name) + " has a non-finite entry");
    }
  }
}

double matrix_sup_norm(const std::vector<std::vector<double>>& m) {
  double norm = 0.0;
  for (const auto& row : m) {
    double s = 0.0;
    for (double v : row) s += std::fabs(v);
    norm = std::max(norm, s);
  }
  return norm;
}

// g or f of the delayed linear form psi -> A psi(-lag)
HistoryMap make_linear_map(std::vector<std::vector<double>> matrix,
                           std::size_t lag_steps) {
  return [matrix = std::move(matrix), lag_steps](
             double, const HistorySegment& seg, std::span<double> out) {
    const auto x = seg.sample(seg.samples - 1 - lag_steps);
    for (std::size_t i = 0; i < out.size(); ++i) {
      double acc = 0.0;
      for (std::size_t n = 0; n < x.size(); ++n) acc += matrix[i][n] * x[n];
      out[i] = acc;
    }
  };
}

// delay-kernel form: time_fn(t) * trapezoid_{[-r,0]} kernel(theta) psi(theta)
HistoryMap make_kernel_map(std::function<double(double)> time_fn,
                           std::vector<double> kernel, double step) {
  std::vector<double> weights = std::move(kernel);
  for (double& w : weights) w *= step;
  weights.front() *= 0.5;
  weights.back() *= 0.5;
  return [time_fn = std::move(time_fn), weights = std::move(weights)](
             double t, const HistorySegment& seg, std::span<double> out) {
    const double scale = time_fn(t);
    for (std::size_t n = 0; n < out.size(); ++n) {
      double acc = 0.0;
      for (std::size_t k = 0; k < seg.samples; ++k) {
        acc += weights[k] * seg.sample(k)[n];
      }
      out[n] = scale * acc;
    }
  };
}

std::vector<double> build_phi(const HistorySpec& spec, const TimeGrid& grid,
                              std::size_t dim) {
  const std::size_t len = grid.history_steps + 1;
  std::vector<double> phi(len * dim, 0.0);
  if (spec.form == "constant") {
    if (spec.values.size() != dim) {
      config_error("history 'constant' needs one value per mode");
    }
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t n = 0; n < dim; ++n) phi[i * dim + n] = spec.values[n];
    }
  } else if (spec.form == "decaying_modes") {
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t n = 0; n < dim; ++n) {
        const double mode = static_cast<double>(n + 1);
        phi[i * dim + n] = spec.scale / (mode * mode);
      }
    }
  } else if (spec.form == "samples") {
    if (spec.samples.size() != len * dim) {
      std::ostringstream os;
      os << "history 'samples' needs " << len * dim << " values, got "
         << spec.samples.size();
      config_error(os.str());
    }
    phi = spec.samples;
  } else {
    config_error("unknown history form '" + spec.form + "'");
  }
  return phi;
}

}  // namespace

BuiltScenario build_scenario(const ScenarioConfig& config) {
  // the solver theory lives strictly inside (1, 2)
  if (!(config.alpha > 1.0) || !(config.alpha < 2.0)) {
    config_error("alpha must lie strictly inside (1, 2)");
  }
  if (config.modes < 1) config_error("modes must be >= 1");
  require_positive(config.damping, "damping");
  require_positive(config.M, "M");
  if (config.C && !(*config.C > 0.0)) config_error("C must be positive");
  require_positive(config.eps, "eps");
  require_positive(config.tolerance, "tolerance");
  if (config.max_iter < 1) config_error("max_iter must be >= 1");

  TimeGrid grid;
  try {
    grid = TimeGrid::make(config.delay, config.horizon, config.step);
    grid.steps_of(config.omega);
  } catch (const std::invalid_argument& e) {
    config_error(e.what());
  }
  if (!(config.omega > 0.0)) config_error("omega must be positive");
  if (config.horizon - config.omega < 4.0 * config.delay) {
    config_error("horizon must cover omega + 4 r for the diagnostics");
  }

  BuiltScenario built;
  built.grid = grid;
  NeutralSystem& sys = built.system;
  sys.alpha = FractionalOrder(config.alpha);
  sys.spectrum = SectorialSpectrum::dirichlet_modes(config.modes, config.damping,
                                                    config.C.value_or(1.0),
                                                    config.M);
  sys.delay = config.delay;
  const std::size_t dim = sys.spectrum.dim();
  sys.phi = build_phi(config.history, grid, dim);

  const ForcingSpec& forcing = config.forcing;
  if (forcing.form == "zero") {
    sys.lipschitz.g = LipschitzModulus::constant_value(0.0);
    sys.lipschitz.f = LipschitzModulus::constant_value(0.0);
  } else if (forcing.form == "constant") {
    if (forcing.constant_value.size() != dim) {
      config_error("constant forcing needs one value per mode");
    }
    const std::vector<double> b = forcing.constant_value;
    sys.f_map = [b](double, const HistorySegment&, std::span<double> out) {
      std::copy(b.begin(), b.end(), out.begin());
    };
    sys.lipschitz.g = LipschitzModulus::constant_value(0.0);
    sys.lipschitz.f = LipschitzModulus::constant_value(0.0);
  } else if (forcing.form == "linear") {
    check_matrix(forcing.g_matrix, dim, "g_matrix");
    check_matrix(forcing.f_matrix, dim, "f_matrix");
    std::size_t g_lag = 0, f_lag = 0;
    try {
      g_lag = grid.steps_of(forcing.g_lag);
      f_lag = grid.steps_of(forcing.f_lag);
    } catch (const std::invalid_argument& e) {
      config_error(e.what());
    }
    if (g_lag > grid.history_steps || f_lag > grid.history_steps) {
      config_error("linear forcing lags must lie in [0, r]");
    }
    sys.g_map = make_linear_map(forcing.g_matrix, g_lag);
    sys.f_map = make_linear_map(forcing.f_matrix, f_lag);
    sys.lipschitz.g =
        LipschitzModulus::constant_value(matrix_sup_norm(forcing.g_matrix));
    sys.lipschitz.f =
        LipschitzModulus::constant_value(matrix_sup_norm(forcing.f_matrix));
  } else if (forcing.form == "section4") {
    const std::size_t count = grid.history_steps + 1;
    const auto k = forcing.k.sample_grid(config.delay, count);
    const auto m = forcing.m.sample_grid(config.delay, count);
    sys.g_map = make_kernel_map(make_time_fn(forcing.h, grid), k, grid.step);
    sys.f_map = make_kernel_map(make_time_fn(forcing.j, grid), m, grid.step);
    const auto lc = section4_lipschitz(forcing.h.sup(), forcing.j.sup(), k, m,
                                       config.delay);
    sys.lipschitz.g = LipschitzModulus::constant_value(lc.Lg);
    sys.lipschitz.f = LipschitzModulus::constant_value(lc.Lf);
  } else {
    config_error("unknown forcing form '" + forcing.form + "'");
  }
  sys.lipschitz.f_kind = LipschitzKind::constant;

  // decay-bound constants: fit C over the solve grid unless pinned
  built.M = config.M;
  if (config.C) {
    built.C = *config.C;
  } else {
    std::vector<double> t_grid(grid.positive_nodes());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      t_grid[i] = static_cast<double>(i) * grid.step;
    }
    built.C = fit_decay_constant(sys.spectrum, sys.alpha, t_grid);
    built.fitted_C = true;
  }
  sys.spectrum.C = built.C;
  sys.spectrum.M = built.M;
  return built;
}

ScenarioConfig section4_preset(const std::string& preset) {
  double boost = 1.0;
  if (preset == "large") {
    boost = 100.0;
  } else if (preset != "small") {
    config_error("unknown preset '" + preset + "' (use small or large)");
  }
  ScenarioConfig c;
  c.alpha = 1.5;
  c.modes = 8;
  c.damping = 1.0;
  c.M = 1.0;
  c.delay = 1.0;
  c.horizon = 101.0;
  c.step = 0.02;
  c.omega = 1.0;
  c.eps = 0.05;
  c.tolerance = 1e-9;
  c.max_iter = 60;
  c.forcing.form = "section4";
  c.forcing.h = {"one_plus_sin", 0.0, 0.05 * boost, 1.0, {}};
  c.forcing.k = {"exp", 1.0, 1.0, {}};
  c.forcing.j = {"one_plus_sin", 0.0, 0.08 * boost, 1.0, {}};
  c.forcing.m = {"exp", 1.0, 1.0, {}};
  c.history.form = "decaying_modes";
  c.history.scale = 1.0;
  return c;
}

// ---------------------------------------------------------------------------
// running

namespace {

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

void write_physical_csv(const std::filesystem::path& path, const Trajectory& u,
                        int samples) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << "time";
  char buf[32];
  for (int i = 1; i <= samples; ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g",
                  M_PI * static_cast<double>(i) / (samples + 1));
    f << ",theta_" << buf;
  }
  f << "\n";
  for (std::size_t node = 0; node < u.nodes(); ++node) {
    std::snprintf(buf, sizeof(buf), "%.17g", u.grid().node(node));
    f << buf;
    const auto coeffs = u.at(node);
    for (int i = 1; i <= samples; ++i) {
      const double theta = M_PI * static_cast<double>(i) / (samples + 1);
      double v = 0.0;
      for (std::size_t n = 0; n < coeffs.size(); ++n) {
        v += coeffs[n] * std::sin(static_cast<double>(n + 1) * theta);
      }
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      f << ',' << buf;
    }
    f << "\n";
  }
}

void log_line(const RunOptions& options, const std::string& line) {
  if (options.log) *options.log << line << "\n";
}

GuaranteeReport scenario_guarantee(const BuiltScenario& built,
                                   const ScenarioConfig& config) {
  return guarantee(built.system.lipschitz, built.C, built.M,
                   built.system.spectrum.mu, config.alpha, config.horizon,
                   config.step);
}

}  // namespace

ClassifyThresholds thresholds_from_env() {
  ClassifyThresholds t;
  if (const char* env = std::getenv("FIDE_THRESHOLD_ABS")) {
    const double v = std::atof(env);
    if (v > 0.0) {
      t.sap_abs = v;
      t.mean_abs = v;
    }
  }
  return t;
}

int run_check(const ScenarioConfig& config, const RunOptions& options) {
  try {
    const auto built = build_scenario(config);
    const auto report = scenario_guarantee(built, config);
    write_text_file(options.out_dir / "guarantee.json", report_to_json(report));
    log_line(options, "guarantee: best = " + report.best);
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    log_line(options, std::string("config error: ") + e.what());
    return kExitConfigError;
  }
}

int run_scenario(const ScenarioConfig& config, const RunOptions& options) {
  BuiltScenario built;
  try {
    built = build_scenario(config);
  } catch (const std::invalid_argument& e) {
    log_line(options, std::string("config error: ") + e.what());
    return kExitConfigError;
  }

  const auto guarantee_report = scenario_guarantee(built, config);
  write_text_file(options.out_dir / "guarantee.json",
                  report_to_json(guarantee_report));
  {
    std::ostringstream os;
    os << "guarantee: best = " << guarantee_report.best
       << ", contraction constant = " << guarantee_report.contraction_constant
       << (built.fitted_C ? " (C fitted: " : " (C pinned: ") << built.C << ")";
    log_line(options, os.str());
  }

  const auto result =
      solve_picard(built.system, built.grid, config.tolerance, config.max_iter);
  {
    std::ostringstream os;
    os << "picard: " << to_string(result.status) << " after "
       << result.iterations << " iterations, residual " << result.residual;
    log_line(options, os.str());
  }
  result.solution.write_csv_file((options.out_dir / "trajectory.csv").string());
  if (options.physical_samples > 0) {
    write_physical_csv(options.out_dir / "physical.csv", result.solution,
                       options.physical_samples);
  }
  if (result.status != PicardStatus::converged) {
    return kExitNoConvergence;
  }

  const auto sampled = SampledFunction::from_trajectory(result.solution);
  const auto report = classify(sampled, config.omega, config.delay, config.eps,
                               thresholds_from_env());
  write_text_file(options.out_dir / "periodicity.json", report_to_json(report));
  {
    std::ostringstream os;
    os << "verdicts: sap = " << (report.sap.verdict ? "true" : "false")
       << ", psap = " << (report.psap.verdict ? "true" : "false")
       << ", class_r = " << (report.class_r.verdict ? "true" : "false");
    log_line(options, os.str());
  }

  const bool guaranteed = guarantee_report.best != "none";
  if (guaranteed && !report.class_r.verdict) {
    // the theory promised a class-r solution and the diagnostics disagree
    return kExitDiagnosticFailure;
  }
  return kExitOk;
}

namespace {

SampledFunction read_trajectory_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) config_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(f, line) || line.rfind("time", 0) != 0) {
    config_error("trajectory CSV must start with a time,coord_... header");
  }
  std::vector<double> times;
  std::vector<double> values;
  std::size_t dim = 0;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    std::vector<double> entries;
    while (std::getline(row, cell, ',')) entries.push_back(std::stod(cell));
    if (entries.size() < 2) config_error("trajectory CSV row with no coordinates");
    for (double v : entries) {
      if (!std::isfinite(v)) config_error("trajectory CSV has a non-finite entry");
    }
    if (dim == 0) {
      dim = entries.size() - 1;
    } else if (entries.size() - 1 != dim) {
      config_error("trajectory CSV rows have inconsistent widths");
    }
    times.push_back(entries[0]);
    values.insert(values.end(), entries.begin() + 1, entries.end());
  }
  if (times.size() < 3) config_error("trajectory CSV has too few rows");
  const double step = times[1] - times[0];
  if (!(step > 0.0)) config_error("trajectory CSV times must increase");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (std::fabs(times[i] - times[i - 1] - step) > 1e-9 * std::max(1.0, step)) {
      config_error("trajectory CSV times are not uniformly spaced");
    }
  }
  // keep t >= 0 (solver CSVs include the history part)
  std::size_t first = 0;
  while (first < times.size() && times[first] < -1e-12) ++first;
  if (times.size() - first < 3) config_error("trajectory CSV has no t >= 0 part");
  SampledFunction out;
  out.t0 = times[first];
  out.step = step;
  out.dim = dim;
  out.data.assign(values.begin() + first * dim, values.end());
  return out;
}

}  // namespace

int run_diagnose(const std::filesystem::path& csv, double omega, double r,
                 double eps, const RunOptions& options) {
  try {
    const auto f = read_trajectory_csv(csv);
    const auto report = classify(f, omega, r, eps, thresholds_from_env());
    write_text_file(options.out_dir / "periodicity.json", report_to_json(report));
    std::ostringstream os;
    os << "verdicts: sap = " << (report.sap.verdict ? "true" : "false")
       << ", psap = " << (report.psap.verdict ? "true" : "false")
       << ", class_r = " << (report.class_r.verdict ? "true" : "false");
    log_line(options, os.str());
    return report.class_r.verdict ? kExitOk : kExitDiagnosticFailure;
  } catch (const std::invalid_argument& e) {
    log_line(options, std::string("config error: ") + e.what());
    return kExitConfigError;
  }
}

}  // namespace fide
