#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fide/dynamics.hpp"

namespace fide {

// process exit codes shared by the CLI and the scenario runner
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitDiagnosticFailure = 4;

/// Scalar function of time given by a named closed form or inline samples.
struct TimeFunctionSpec {
  std::string form = "constant";  // constant | one_plus_sin | samples
  double value = 0.0;             // constant
  double amplitude = 0.0;         // one_plus_sin: a (1 + sin(2 pi t / period))
  double period = 1.0;
  std::vector<double> samples;  // samples: values on the scenario grid from t=0

  double evaluate(double t) const;
  /// exact for the named closed forms, the sample max otherwise
  double sup() const;
};

/// Kernel on [-r, 0] given by a named form or r/h + 1 inline samples.
struct KernelSpec {
  std::string form = "constant";  // constant | exp | samples
  double value = 1.0;             // constant
  double scale = 1.0;             // exp: scale * e^theta
  std::vector<double> samples;    // oldest first

  std::vector<double> sample_grid(double delay, std::size_t count) const;
};

/// f/g pair: zero, a constant forcing vector, delayed linear maps, or the
/// delay-kernel form g = h(t) int k psi, f = j(t) int m psi.
struct ForcingSpec {
  std::string form = "zero";  // zero | constant | linear | section4
  std::vector<double> constant_value;
  std::vector<std::vector<double>> g_matrix, f_matrix;  // linear
  double g_lag = 0.0, f_lag = 0.0;
  TimeFunctionSpec h, j;  // section4
  KernelSpec k, m;
};

struct HistorySpec {
  std::string form = "decaying_modes";  // constant | decaying_modes | samples
  std::vector<double> values;           // constant: one state vector
  double scale = 1.0;                   // decaying_modes: phi_n = scale / n^2
  std::vector<double> samples;          // full (r/h+1) x N block, oldest first
};

struct ScenarioConfig {
  double alpha = 1.5;
  int modes = 8;
  double damping = 1.0;
  std::optional<double> C;  // absent: fit empirically on the solve grid
  double M = 1.0;
  double delay = 1.0;
  double horizon = 101.0;
  double step = 0.02;
  double omega = 1.0;
  double eps = 0.05;
  double tolerance = 1e-9;
  int max_iter = 60;
  ForcingSpec forcing;
  HistorySpec history;
};

/// JSON round trip. load_config throws std::invalid_argument with a
/// human-readable message on malformed input (mapped to exit code 2).
ScenarioConfig load_config(const std::filesystem::path& path);
ScenarioConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const ScenarioConfig& config);

/// Everything needed to run: validated system + grid + decay constants.
struct BuiltScenario {
  NeutralSystem system;
  TimeGrid grid;
  double C = 1.0;  // fitted when the config leaves it open
  double M = 1.0;
  bool fitted_C = false;
};
BuiltScenario build_scenario(const ScenarioConfig& config);

/// The built-in delay-kernel demonstration scenario.
/// preset: "small" (guarantee satisfied) or "large" (amplitudes x100,
/// guarantee fails).
ScenarioConfig section4_preset(const std::string& preset);

struct RunOptions {
  std::filesystem::path out_dir = ".";
  int physical_samples = 0;  // >0: also emit physical.csv via sine synthesis
  std::ostream* log = nullptr;
};

/// solve -> diagnose -> check pipeline; writes trajectory.csv,
/// guarantee.json and periodicity.json into out_dir; returns an exit code.
int run_scenario(const ScenarioConfig& config, const RunOptions& options);

/// Condition check only (guarantee.json).
int run_check(const ScenarioConfig& config, const RunOptions& options);

/// Classification of an exported trajectory CSV (periodicity.json).
int run_diagnose(const std::filesystem::path& csv, double omega, double r,
                 double eps, const RunOptions& options);

/// Oracle-backed example table of every module; prints one line per example,
/// returns the number of failures. FIDE_TOL_SCALE scales the tolerances.
int run_selftest(std::ostream& os);

/// Classification thresholds after applying the FIDE_THRESHOLD_ABS override.
ClassifyThresholds thresholds_from_env();

}  // namespace fide
