#ifndef PPC_GRID_HPP
#define PPC_GRID_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "core.hpp"

namespace ppc {

/// Regular midpoint-rule quadrature grid over a window: `res` nodes per axis,
/// each node at the center of its cell. Tables indexed row-major with the
/// last axis fastest.
class Grid {
 public:
  Grid(Window window, int res);

  const Window& window() const { return window_; }
  int res() const { return res_; }
  std::size_t node_count() const { return node_count_; }
  double cell_volume() const { return cell_volume_; }
  double step(std::size_t axis) const { return step_[axis]; }

  double coord(std::size_t axis, int i) const {
    return window_.lower()[axis] + (i + 0.5) * step_[axis];
  }
  Point node(std::size_t flat) const;

  /// Midpoint-rule integral of a node table over the window.
  double integrate(const std::vector<double>& table) const;

  /// Multilinear interpolation of a node table at p (clamped to the node hull,
  /// so the outermost half-cells extrapolate as constants).
  double interpolate(const std::vector<double>& table, const Point& p) const;

  /// Closed index range [first, last] of nodes whose axis coordinate lies
  /// within [a, b]; empty ranges come back as first > last.
  std::pair<int, int> axis_range(std::size_t axis, double a, double b) const;

 private:
  Window window_;
  int res_;
  std::size_t node_count_;
  std::vector<double> step_;
  double cell_volume_;
};

}  // namespace ppc

#endif  // PPC_GRID_HPP
