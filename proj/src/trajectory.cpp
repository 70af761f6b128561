#include "fide/trajectory.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fide/spectrum.hpp"

namespace fide {

Trajectory::Trajectory(TimeGrid grid, std::size_t dim)
    : grid_(grid), dim_(dim), data_(grid.total_nodes * dim, 0.0) {
  if (dim == 0) throw std::invalid_argument("trajectory: dimension must be >= 1");
}

std::span<double> Trajectory::at(std::size_t node) {
  return {data_.data() + node * dim_, dim_};
}

std::span<const double> Trajectory::at(std::size_t node) const {
  return {data_.data() + node * dim_, dim_};
}

double Trajectory::sup_distance(const Trajectory& other) const {
  if (other.data_.size() != data_.size()) {
    throw std::invalid_argument("trajectory: size mismatch in sup_distance");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    d = std::max(d, std::fabs(data_[i] - other.data_[i]));
  }
  return d;
}

void Trajectory::write_csv(std::ostream& os) const {
  os << "time";
  for (std::size_t j = 1; j <= dim_; ++j) os << ",coord_" << j;
  os << "\n";
  char buf[32];
  for (std::size_t i = 0; i < nodes(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", grid_.node(i));
    os << buf;
    const auto row = at(i);
    for (double v : row) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      os << ',' << buf;
    }
    os << "\n";
  }
}

void Trajectory::write_csv_file(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("trajectory: cannot open " + path);
  write_csv(f);
}

HistorySegment segment_at(const Trajectory& u, double t) {
  if (t < 0.0) {
    std::ostringstream os;
    os << "segment_at: t = " << t << " must be >= 0";
    throw std::invalid_argument(os.str());
  }
  const std::size_t end = u.grid().index_of(t);
  const std::size_t len = u.grid().history_steps + 1;
  return HistorySegment{len, u.dim(), u.at(end - u.grid().history_steps).data()};
}

}  // namespace fide
