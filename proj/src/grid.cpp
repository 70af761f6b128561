#include "fide/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fide {
namespace {

// rounds q = duration/step to an integer, rejecting misaligned durations
std::size_t aligned_steps(double duration, double step, const char* what) {
  const double q = duration / step;
  const double rounded = std::round(q);
  if (rounded < 0.0 || std::fabs(q - rounded) > 1e-6 * std::max(1.0, rounded)) {
    std::ostringstream os;
    os << what << " = " << duration << " is not a non-negative multiple of the step "
       << step;
    throw std::invalid_argument(os.str());
  }
  return static_cast<std::size_t>(rounded);
}

}  // namespace

TimeGrid TimeGrid::make(double delay, double horizon, double step) {
  if (!(delay > 0.0) || !std::isfinite(delay)) {
    throw std::invalid_argument("grid: delay must be positive and finite");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("grid: step must be positive and finite");
  }
  if (!(horizon > delay)) {
    throw std::invalid_argument("grid: horizon must exceed the delay");
  }
  TimeGrid g;
  g.delay = delay;
  g.horizon = horizon;
  g.step = step;
  g.history_steps = aligned_steps(delay, step, "delay r");
  const std::size_t horizon_steps = aligned_steps(horizon, step, "horizon T");
  g.total_nodes = g.history_steps + horizon_steps + 1;
  return g;
}

std::size_t TimeGrid::index_of(double t) const {
  const std::size_t i = aligned_steps(t + delay, step, "time t + r");
  if (i >= total_nodes) {
    std::ostringstream os;
    os << "time " << t << " is outside the grid [-" << delay << ", " << horizon
       << "]";
    throw std::invalid_argument(os.str());
  }
  return i;
}

std::size_t TimeGrid::steps_of(double duration) const {
  return aligned_steps(duration, step, "duration");
}

}  // namespace fide
