#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fide/conditions.hpp"
#include "fide/spectrum.hpp"
#include "fide/trajectory.hpp"

namespace fide {

/// f or g: (t, trailing history window) -> state vector written to out.
using HistoryMap =
    std::function<void(double t, const HistorySegment&, std::span<double> out)>;

/// The problem datum: d/dt[u(t) + g(t,u_t)] is driven through the sectorial
/// spectrum, forced by f(t,u_t), with initial history phi on [-r,0].
struct NeutralSystem {
  FractionalOrder alpha{1.5};
  SectorialSpectrum spectrum;
  double delay = 1.0;
  HistoryMap f_map;  // empty == 0
  HistoryMap g_map;  // empty == 0
  std::vector<double> phi;  // (r/h + 1) x dim samples, oldest first
  LipschitzData lipschitz;

  HistorySegment phi_segment(const TimeGrid& grid) const;
};

/// Precomputed diagonal kernel E_{alpha,1}(lambda_n (j h)^alpha) for every
/// grid lag j; shared by the norm fit and all Picard sweeps.
class SolutionOperatorTable {
 public:
  SolutionOperatorTable(const SectorialSpectrum& spectrum,
                        const FractionalOrder& alpha, const TimeGrid& grid);

  std::size_t dim() const { return dim_; }
  std::size_t lags() const { return values_.size() / dim_; }
  std::span<const double> lag(std::size_t j) const {
    return {values_.data() + j * dim_, dim_};
  }
  /// out += scale * S(j h) x
  void accumulate(std::size_t j, std::span<const double> x, double scale,
                  std::span<double> out) const;
  double norm(std::size_t j) const;

 private:
  std::size_t dim_;
  std::vector<double> values_;
};

/// One application of the mild-solution map:
///   (Phi u)(t) = S(t)[phi(0) - g(0,phi)] + g(t,u_t)
///                + trapezoid_{[0,t]} S(t-s) f(s,u_s) ds,
/// with (Phi u) = phi on [-r,0]. Requires u = phi on [-r,0] (within 1e-12).
/// Each output node's sum is independent given u (safe to parallelize);
/// the current implementation evaluates them sequentially.
Trajectory mild_map_apply(const NeutralSystem& sys, const Trajectory& u);

/// mild_map_apply against a caller-provided kernel table (used by the solver
/// to avoid rebuilding the table each sweep).
Trajectory mild_map_apply(const NeutralSystem& sys, const Trajectory& u,
                          const SolutionOperatorTable& table);

enum class PicardStatus { converged, max_iterations, diverged };

struct PicardResult {
  Trajectory solution;
  PicardStatus status = PicardStatus::converged;
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> residual_history;
};

/// Picard iteration of the mild-solution map from the constant phi(0)
/// extension (or a caller-supplied initial guess). Stops at sup-norm
/// residual <= tol, at max_iter, or when the residual grows past 10x its
/// running minimum (divergence guard).
PicardResult solve_picard(const NeutralSystem& sys, const TimeGrid& grid,
                          double tol, int max_iter);
PicardResult solve_picard(const NeutralSystem& sys, const TimeGrid& grid,
                          double tol, int max_iter, const Trajectory& initial);

/// kappa(t) = trapezoid_{[0,t]} S(t-s) u(s) ds on [0,T], kappa = 0 on [-r,0];
/// the convolution whose asymptotic-periodicity preservation the diagnostics
/// verify.
Trajectory convolve_solution_operator(const SectorialSpectrum& spectrum,
                                      const FractionalOrder& alpha,
                                      const Trajectory& u);

const char* to_string(PicardStatus status);

}  // namespace fide
