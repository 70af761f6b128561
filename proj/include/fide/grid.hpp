#pragma once

#include <cstddef>

namespace fide {

/// Uniform grid over [-r, T] with -r, 0 and T on the nodes, so history
/// lookups u(t - r) always land on a node.
struct TimeGrid {
  double delay = 1.0;    // r > 0
  double horizon = 2.0;  // T > r
  double step = 0.01;    // h > 0

  std::size_t history_steps = 0;  // r/h
  std::size_t total_nodes = 0;    // (T+r)/h + 1

  /// Validates r, T, h and the integrality of r/h and T/h.
  static TimeGrid make(double delay, double horizon, double step);

  double node(std::size_t i) const { return -delay + static_cast<double>(i) * step; }
  std::size_t zero_index() const { return history_steps; }
  std::size_t positive_nodes() const { return total_nodes - history_steps; }

  /// Grid index of an on-grid time t in [-r, T]; throws if t is off-grid.
  std::size_t index_of(double t) const;

  /// Number of steps spanned by an on-grid duration (omega, r, ...);
  /// throws if the duration is not a multiple of h.
  std::size_t steps_of(double duration) const;
};

}  // namespace fide
