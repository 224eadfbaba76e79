#include "core.hpp"

#include <algorithm>

namespace ppc {

double euclidean(const Point& p, const Point& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("euclidean: dimension mismatch (" +
                                std::to_string(p.dim()) + " vs " +
                                std::to_string(q.dim()) + ")");
  return std::sqrt(dist2(p, q));
}

Window::Window(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size())
    throw std::invalid_argument("Window: lower/upper must be nonempty and of equal dimension");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
      throw std::invalid_argument("Window: bounds must be finite");
    if (!(lower_[i] < upper_[i]))
      throw std::invalid_argument("Window: lower[" + std::to_string(i) + "] must be < upper[" +
                                  std::to_string(i) + "]");
  }
}

double Window::measure() const {
  double m = 1.0;
  for (std::size_t i = 0; i < dim(); ++i) m *= side(i);
  return m;
}

double Window::diameter() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) s += side(i) * side(i);
  return std::sqrt(s);
}

bool Window::contains(const Point& p) const {
  if (p.dim() != dim())
    throw std::invalid_argument("Window::contains: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (p[i] < lower_[i] || p[i] > upper_[i]) return false;
  }
  return true;
}

PointPattern::PointPattern(Window window, std::vector<Point> points)
    : window_(std::move(window)), points_(std::move(points)) {
  for (const Point& p : points_) {
    for (double c : p.coords)
      if (!std::isfinite(c)) throw std::invalid_argument("PointPattern: non-finite coordinate");
    if (!window_.contains(p))
      throw std::invalid_argument("PointPattern: point outside window");
  }
}

int max_label(const std::vector<LabeledPattern>& data) {
  int m = -1;
  for (const auto& lp : data) m = std::max(m, lp.label);
  return m;
}

}  // namespace ppc
