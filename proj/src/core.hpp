#ifndef PPC_CORE_HPP
#define PPC_CORE_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppc {

/// A location in the observation window. Coordinates are finite reals.
struct Point {
  std::vector<double> coords;

  Point() = default;
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}
  Point(double x, double y) : coords{x, y} {}

  std::size_t dim() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }
  bool operator==(const Point& o) const { return coords == o.coords; }
};

double euclidean(const Point& p, const Point& q);

/// Squared Euclidean distance between two coordinate arrays of length `dim`.
inline double dist2(const double* a, const double* b, std::size_t dim) {
  double s = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double dist2(const Point& a, const Point& b) {
  return dist2(a.coords.data(), b.coords.data(), a.dim());
}

/// Axis-aligned box in R^d with Lebesgue measure. Boundary is inclusive so
/// samplers never reject boundary hits.
class Window {
 public:
  Window(std::vector<double> lower, std::vector<double> upper);

  static Window square(double lo, double hi) { return Window({lo, lo}, {hi, hi}); }
  static Window unit_square() { return square(0.0, 1.0); }

  std::size_t dim() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double side(std::size_t i) const { return upper_[i] - lower_[i]; }

  double measure() const;
  double diameter() const;
  bool contains(const Point& p) const;

  bool operator==(const Window& o) const {
    return lower_ == o.lower_ && upper_ == o.upper_;
  }
  bool operator!=(const Window& o) const { return !(*this == o); }

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// A finite set of points in a window. Stored as a list: Poisson realizations
/// have distinct points almost surely and duplicates are tolerated downstream.
class PointPattern {
 public:
  PointPattern(Window window, std::vector<Point> points);

  const Window& window() const { return window_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

 private:
  Window window_;
  std::vector<Point> points_;
};

struct LabeledPattern {
  PointPattern pattern;
  int label = 0;
};

int max_label(const std::vector<LabeledPattern>& data);

}  // namespace ppc

#endif  // PPC_CORE_HPP
