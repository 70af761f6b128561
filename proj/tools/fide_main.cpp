// Command-line front end: solve a configured scenario, classify exported
// trajectories, check the existence conditions, run the built-in
// delay-kernel example, or run the embedded self test.
#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "fide/scenario.hpp"

namespace {

fide::RunOptions make_options(const std::string& out_dir, int physical) {
  fide::RunOptions options;
  options.out_dir = out_dir;
  options.physical_samples = physical;
  options.log = &std::cout;
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fide: mild solutions of fractional integro-differential neutral delay "
      "equations with asymptotic-periodicity diagnostics"};
  app.require_subcommand(1);

  std::string config_path, csv_path, out_dir = ".", preset = "small";
  double omega = 1.0, window_r = 1.0, eps = 1e-2;
  double force_alpha = 0.0;
  int physical = 0;

  auto* solve = app.add_subcommand(
      "solve", "solve a scenario config and write trajectory + reports");
  solve->add_option("config", config_path, "scenario JSON file")->required();
  solve->add_option("--out", out_dir, "artifact directory (default .)");
  solve->add_option("--physical", physical,
                    "also emit physical.csv with this many interior "
                    "sine-synthesis points");

  auto* diagnose = app.add_subcommand(
      "diagnose", "classify an exported trajectory CSV");
  diagnose->add_option("csv", csv_path, "trajectory CSV")->required();
  diagnose->add_option("--omega", omega, "candidate period")->required();
  diagnose->add_option("--r", window_r, "trailing window length")->required();
  diagnose->add_option("--eps", eps, "ergodic level threshold")->required();
  diagnose->add_option("--out", out_dir, "artifact directory (default .)");

  auto* check = app.add_subcommand(
      "check", "evaluate the existence/uniqueness conditions only");
  check->add_option("config", config_path, "scenario JSON file")->required();
  check->add_option("--out", out_dir, "artifact directory (default .)");

  auto* section4 = app.add_subcommand(
      "section4", "run the built-in delay-kernel example scenario");
  section4->add_option("--preset", preset, "small (default) or large");
  section4->add_option("--out", out_dir, "artifact directory (default .)");
  section4->add_option("--physical", physical,
                       "also emit physical.csv with this many points");
  section4->add_option("--force-alpha", force_alpha,
                       "debug: override the preset's fractional order");

  auto* selftest = app.add_subcommand(
      "selftest", "run the oracle-backed example table of every module");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const auto config = fide::load_config(config_path);
      return fide::run_scenario(config, make_options(out_dir, physical));
    }
    if (diagnose->parsed()) {
      return fide::run_diagnose(csv_path, omega, window_r, eps,
                                make_options(out_dir, 0));
    }
    if (check->parsed()) {
      const auto config = fide::load_config(config_path);
      return fide::run_check(config, make_options(out_dir, 0));
    }
    if (section4->parsed()) {
      auto config = fide::section4_preset(preset);
      if (section4->count("--force-alpha") > 0) config.alpha = force_alpha;
      return fide::run_scenario(config, make_options(out_dir, physical));
    }
    if (selftest->parsed()) {
      return fide::run_selftest(std::cout) == 0 ? fide::kExitOk : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return fide::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return fide::kExitOk;
}
