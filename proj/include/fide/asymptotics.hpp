#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fide {

class Trajectory;

/// Uniformly sampled function of time with scalar or vector values,
/// the input of every periodicity diagnostic.
struct SampledFunction {
  double t0 = 0.0;
  double step = 0.01;
  std::size_t dim = 1;
  std::vector<double> data;  // node-major, nodes() * dim

  std::size_t nodes() const { return data.size() / dim; }
  double time(std::size_t i) const { return t0 + static_cast<double>(i) * step; }
  double duration() const { return static_cast<double>(nodes() - 1) * step; }
  std::span<const double> value(std::size_t i) const {
    return {data.data() + i * dim, dim};
  }
  /// sup-coefficient norm of the i-th sample
  double norm_at(std::size_t i) const;
  double sup_norm() const;

  static SampledFunction from_scalar(double t0, double step,
                                     std::vector<double> values);
  static SampledFunction sample(double t0, double step, std::size_t nodes,
                                const std::function<double(double)>& f);
  /// restriction of a trajectory to t >= from_t
  static SampledFunction from_trajectory(const Trajectory& u,
                                         double from_t = 0.0);

  /// number of grid steps in an on-grid duration; throws if misaligned
  std::size_t steps_of(double duration, const char* what) const;
};

/// sup of ||f(t+omega) - f(t)|| over the last 10% of [0, T-omega].
double sap_tail(const SampledFunction& f, double omega);

/// (1/T) trapezoid_{[0,T]} ||f(s+omega) - f(s)|| ds.
double psap_mean(const SampledFunction& f, double omega, double T);

/// (1/T) trapezoid_{[r,T]} sup_{tau in [s-r,s]} ||f(tau+omega) - f(tau)|| ds.
double class_r_mean(const SampledFunction& f, double omega, double r, double T);

/// Step-counted fraction (measure/T) of the cells of [r,T] whose trailing
/// window-sup of ||f(.+omega) - f(.)|| is >= eps.
double ergodic_set_measure(const SampledFunction& f, double omega, double r,
                           double eps, double T);

/// sup over on-grid window starts of the unit-window L^p mean,
/// sup_t (int_t^{t+1} ||f||^p)^{1/p}.
double stepanov_norm(const SampledFunction& f, double p);

struct ClassifyThresholds {
  double sap_abs = 1e-3;   // tail sup below this => S-asymptotically periodic
  double mean_abs = 1e-3;  // final mean below this => pseudo verdicts
  double decay_ratio = 0.5;  // or final <= ratio * first checkpoint
};

struct SpaceVerdict {
  bool verdict = false;
  double threshold = 0.0;
};

using CheckpointCurve = std::vector<std::pair<double, double>>;

/// Aggregated diagnostics. Verdicts respect the embedding chain: a true SAP
/// verdict forces the PSAP and class-r verdicts.
struct PeriodicityReport {
  double omega = 1.0;
  double r = 1.0;
  double eps = 1e-2;
  double sap_tail = 0.0;
  CheckpointCurve psap_mean_curve;
  CheckpointCurve class_r_mean_curve;
  CheckpointCurve ergodic_measure_curve;
  SpaceVerdict sap, psap, class_r;
};

/// Runs every diagnostic at the checkpoints {1/4, 1/2, 3/4, 1} x T_diag,
/// T_diag = duration - omega snapped to the grid.
PeriodicityReport classify(const SampledFunction& f, double omega, double r,
                           double eps, const ClassifyThresholds& thresholds = {});

/// JSON text with the exact report field names; deterministic layout.
std::string report_to_json(const PeriodicityReport& report);

}  // namespace fide
