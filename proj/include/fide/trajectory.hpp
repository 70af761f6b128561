#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fide/grid.hpp"

namespace fide {

/// Grid function on [-r, T] with values in the spectral state space,
/// stored node-major.
class Trajectory {
 public:
  Trajectory(TimeGrid grid, std::size_t dim);

  const TimeGrid& grid() const { return grid_; }
  std::size_t dim() const { return dim_; }
  std::size_t nodes() const { return grid_.total_nodes; }

  std::span<double> at(std::size_t node);
  std::span<const double> at(std::size_t node) const;
  std::span<const double> at_time(double t) const { return at(grid_.index_of(t)); }

  std::span<const double> raw() const { return data_; }
  std::span<double> raw() { return data_; }

  /// sup over nodes of the sup-coefficient norm of this - other.
  double sup_distance(const Trajectory& other) const;

  /// CSV with header time,coord_1..coord_N, rows ordered by time.
  void write_csv(std::ostream& os) const;
  void write_csv_file(const std::string& path) const;

 private:
  TimeGrid grid_;
  std::size_t dim_;
  std::vector<double> data_;
};

/// View of the trailing delay window: r/h + 1 state samples ending at some
/// grid time t, oldest first (theta = -r first, theta = 0 last).
struct HistorySegment {
  std::size_t samples = 0;
  std::size_t dim = 0;
  const double* data = nullptr;  // samples * dim doubles

  std::span<const double> sample(std::size_t k) const {
    return {data + k * dim, dim};
  }
  std::span<const double> oldest() const { return sample(0); }
  std::span<const double> newest() const { return sample(samples - 1); }
};

/// u_t for an on-grid time t >= 0 (so that t - r is on the grid too).
HistorySegment segment_at(const Trajectory& u, double t);

}  // namespace fide
