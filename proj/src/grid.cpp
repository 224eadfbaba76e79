#include "grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ppc {

Grid::Grid(Window window, int res) : window_(std::move(window)), res_(res) {
  if (res_ < 2) throw std::invalid_argument("Grid: need at least 2 nodes per axis");
  const std::size_t d = window_.dim();
  step_.resize(d);
  node_count_ = 1;
  cell_volume_ = 1.0;
  for (std::size_t a = 0; a < d; ++a) {
    step_[a] = window_.side(a) / res_;
    cell_volume_ *= step_[a];
    node_count_ *= static_cast<std::size_t>(res_);
  }
}

Point Grid::node(std::size_t flat) const {
  const std::size_t d = window_.dim();
  std::vector<double> c(d);
  for (std::size_t a = d; a-- > 0;) {
    const int i = static_cast<int>(flat % res_);
    flat /= res_;
    c[a] = coord(a, i);
  }
  return Point(std::move(c));
}

double Grid::integrate(const std::vector<double>& table) const {
  if (table.size() != node_count_)
    throw std::invalid_argument("Grid::integrate: table size mismatch");
  double s = 0.0;
  for (double v : table) s += v;
  return s * cell_volume_;
}

double Grid::interpolate(const std::vector<double>& table, const Point& p) const {
  if (table.size() != node_count_)
    throw std::invalid_argument("Grid::interpolate: table size mismatch");
  const std::size_t d = window_.dim();
  if (p.dim() != d) throw std::invalid_argument("Grid::interpolate: dimension mismatch");

  std::vector<int> base(d);
  std::vector<double> frac(d);
  for (std::size_t a = 0; a < d; ++a) {
    double t = (p[a] - window_.lower()[a]) / step_[a] - 0.5;
    t = std::clamp(t, 0.0, double(res_ - 1));
    int i = std::min(static_cast<int>(std::floor(t)), res_ - 2);
    base[a] = i;
    frac[a] = t - i;
  }

  double acc = 0.0;
  const std::size_t corners = std::size_t(1) << d;
  for (std::size_t mask = 0; mask < corners; ++mask) {
    double w = 1.0;
    std::size_t flat = 0;
    for (std::size_t a = 0; a < d; ++a) {
      const int off = (mask >> a) & 1u;
      w *= off ? frac[a] : 1.0 - frac[a];
      flat = flat * res_ + (base[a] + off);
    }
    acc += w * table[flat];
  }
  return acc;
}

std::pair<int, int> Grid::axis_range(std::size_t axis, double a, double b) const {
  const double lo = window_.lower()[axis];
  int first = static_cast<int>(std::ceil((a - lo) / step_[axis] - 0.5));
  int last = static_cast<int>(std::floor((b - lo) / step_[axis] - 0.5));
  first = std::max(first, 0);
  last = std::min(last, res_ - 1);
  return {first, last};
}

}  // namespace ppc
