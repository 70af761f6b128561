#include "fide/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fide/mlf.hpp"

namespace fide {
namespace {

void check_finite(std::span<const double> v, const char* what, double t) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      std::ostringstream os;
      os << what << " produced a non-finite value at t = " << t;
      throw std::runtime_error(os.str());
    }
  }
}

// evaluates a possibly-absent history map into out (zero when absent)
void eval_map(const HistoryMap& map, double t, const HistorySegment& seg,
              std::span<double> out, const char* what) {
  std::fill(out.begin(), out.end(), 0.0);
  if (!map) return;
  map(t, seg, out);
  check_finite(out, what, t);
}

}  // namespace

HistorySegment NeutralSystem::phi_segment(const TimeGrid& grid) const {
  const std::size_t len = grid.history_steps + 1;
  if (phi.size() != len * spectrum.dim()) {
    std::ostringstream os;
    os << "system: phi has " << phi.size() << " entries, expected "
       << len * spectrum.dim();
    throw std::invalid_argument(os.str());
  }
  return HistorySegment{len, spectrum.dim(), phi.data()};
}

SolutionOperatorTable::SolutionOperatorTable(const SectorialSpectrum& spectrum,
                                             const FractionalOrder& alpha,
                                             const TimeGrid& grid)
    : dim_(spectrum.dim()) {
  const std::size_t lags = grid.positive_nodes();
  values_.resize(lags * dim_);
  const MlfParams params{alpha.value(), 1.0};
  for (std::size_t n = 0; n < dim_; ++n) values_[n] = 1.0;  // S(0) = I
  for (std::size_t j = 1; j < lags; ++j) {
    const double ta = std::pow(static_cast<double>(j) * grid.step, alpha.value());
    for (std::size_t n = 0; n < dim_; ++n) {
      values_[j * dim_ + n] = mlf_eval(params, spectrum.eigenvalues[n] * ta);
    }
  }
}

void SolutionOperatorTable::accumulate(std::size_t j, std::span<const double> x,
                                       double scale,
                                       std::span<double> out) const {
  const double* k = values_.data() + j * dim_;
  for (std::size_t n = 0; n < dim_; ++n) out[n] += scale * k[n] * x[n];
}

double SolutionOperatorTable::norm(std::size_t j) const {
  double m = 0.0;
  for (std::size_t n = 0; n < dim_; ++n) {
    m = std::max(m, std::fabs(values_[j * dim_ + n]));
  }
  return m;
}

Trajectory mild_map_apply(const NeutralSystem& sys, const Trajectory& u) {
  const SolutionOperatorTable table(sys.spectrum, sys.alpha, u.grid());
  return mild_map_apply(sys, u, table);
}

Trajectory mild_map_apply(const NeutralSystem& sys, const Trajectory& u,
                          const SolutionOperatorTable& table) {
  const TimeGrid& grid = u.grid();
  const std::size_t dim = sys.spectrum.dim();
  if (u.dim() != dim) {
    throw std::invalid_argument("mild map: trajectory dimension mismatch");
  }
  const HistorySegment phi = sys.phi_segment(grid);

  // precondition u_0 = phi
  const std::size_t zero = grid.zero_index();
  for (std::size_t i = 0; i <= zero; ++i) {
    const auto row = u.at(i);
    for (std::size_t n = 0; n < dim; ++n) {
      if (std::fabs(row[n] - phi.data[i * dim + n]) > 1e-12) {
        throw std::invalid_argument(
            "mild map: trajectory does not agree with phi on [-r, 0]");
      }
    }
  }

  const double h = grid.step;
  const std::size_t steps = grid.total_nodes - 1 - zero;  // nodes after t=0

  // S(t)[phi(0) - g(0, phi)]
  std::vector<double> g_scratch(dim);
  eval_map(sys.g_map, 0.0, phi, g_scratch, "g");
  std::vector<double> x0g(dim);
  for (std::size_t n = 0; n < dim; ++n) x0g[n] = phi.newest()[n] - g_scratch[n];

  // forcing samples f(t_j, u_{t_j}), evaluated once per node
  std::vector<double> f_values;
  const bool has_f = static_cast<bool>(sys.f_map);
  if (has_f) {
    f_values.resize((steps + 1) * dim);
    for (std::size_t j = 0; j <= steps; ++j) {
      const double t = static_cast<double>(j) * h;
      const HistorySegment win{phi.samples, dim,
                               u.at(zero + j - grid.history_steps).data()};
      std::span<double> out{f_values.data() + j * dim, dim};
      eval_map(sys.f_map, t, win, out, "f");
    }
  }

  Trajectory v(grid, dim);
  std::copy(u.raw().begin(), u.raw().begin() + (zero + 1) * dim,
            v.raw().begin());

  for (std::size_t i = 1; i <= steps; ++i) {
    const double t = static_cast<double>(i) * h;
    auto out = v.at(zero + i);
    table.accumulate(i, x0g, 1.0, out);

    const HistorySegment win{phi.samples, dim,
                             u.at(zero + i - grid.history_steps).data()};
    eval_map(sys.g_map, t, win, g_scratch, "g");
    for (std::size_t n = 0; n < dim; ++n) out[n] += g_scratch[n];

    if (has_f) {
      // composite trapezoid of S(t-s) f(s, u_s) over the nodes of [0, t]
      table.accumulate(i, {f_values.data(), dim}, 0.5 * h, out);
      for (std::size_t j = 1; j < i; ++j) {
        table.accumulate(i - j, {f_values.data() + j * dim, dim}, h, out);
      }
      const double* fi = f_values.data() + i * dim;
      for (std::size_t n = 0; n < dim; ++n) out[n] += 0.5 * h * fi[n];
    }
  }
  return v;
}

PicardResult solve_picard(const NeutralSystem& sys, const TimeGrid& grid,
                          double tol, int max_iter) {
  // constant extension of phi(0) beyond t = 0
  Trajectory start(grid, sys.spectrum.dim());
  const HistorySegment phi = sys.phi_segment(grid);
  const std::size_t dim = sys.spectrum.dim();
  std::copy(sys.phi.begin(), sys.phi.end(), start.raw().begin());
  for (std::size_t i = grid.zero_index() + 1; i < grid.total_nodes; ++i) {
    auto row = start.at(i);
    for (std::size_t n = 0; n < dim; ++n) row[n] = phi.newest()[n];
  }
  return solve_picard(sys, grid, tol, max_iter, start);
}

PicardResult solve_picard(const NeutralSystem& sys, const TimeGrid& grid,
                          double tol, int max_iter, const Trajectory& initial) {
  if (!(tol > 0.0)) throw std::invalid_argument("picard: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("picard: max_iter must be >= 1");

  const SolutionOperatorTable table(sys.spectrum, sys.alpha, grid);
  PicardResult result{initial, PicardStatus::max_iterations, 0, 0.0, {}};
  double best = std::numeric_limits<double>::infinity();

  for (int k = 1; k <= max_iter; ++k) {
    Trajectory next = mild_map_apply(sys, result.solution, table);
    const double res = next.sup_distance(result.solution);
    result.solution = std::move(next);
    result.iterations = k;
    result.residual = res;
    result.residual_history.push_back(res);
    if (res <= tol) {
      result.status = PicardStatus::converged;
      return result;
    }
    best = std::min(best, res);
    if (res > 10.0 * best) {
      result.status = PicardStatus::diverged;
      return result;
    }
  }
  result.status = PicardStatus::max_iterations;
  return result;
}

Trajectory convolve_solution_operator(const SectorialSpectrum& spectrum,
                                      const FractionalOrder& alpha,
                                      const Trajectory& u) {
  const TimeGrid& grid = u.grid();
  const std::size_t dim = u.dim();
  if (spectrum.dim() != dim) {
    throw std::invalid_argument("convolution: dimension mismatch");
  }
  const SolutionOperatorTable table(spectrum, alpha, grid);
  const std::size_t zero = grid.zero_index();
  const std::size_t steps = grid.total_nodes - 1 - zero;
  const double h = grid.step;

  Trajectory kappa(grid, dim);  // zero on [-r, 0]
  for (std::size_t i = 1; i <= steps; ++i) {
    auto out = kappa.at(zero + i);
    table.accumulate(i, u.at(zero), 0.5 * h, out);
    for (std::size_t j = 1; j < i; ++j) {
      table.accumulate(i - j, u.at(zero + j), h, out);
    }
    const auto ui = u.at(zero + i);
    for (std::size_t n = 0; n < dim; ++n) out[n] += 0.5 * h * ui[n];
  }
  return kappa;
}

const char* to_string(PicardStatus status) {
  switch (status) {
    case PicardStatus::converged: return "converged";
    case PicardStatus::max_iterations: return "max_iterations";
    case PicardStatus::diverged: return "diverged";
  }
  return "unknown";
}

}  // namespace fide
