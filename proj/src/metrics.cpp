#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ppc {

namespace {

// sup over points of a of the distance to the set b
double directed(const std::vector<Point>& a, const std::vector<Point>& b, std::size_t dim) {
  double worst = 0.0;
  for (const Point& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& q : b) {
      const double d2 = dist2(p.coords.data(), q.coords.data(), dim);
      if (d2 < best) best = d2;
    }
    if (best > worst) worst = best;
  }
  return std::sqrt(worst);
}

}  // namespace

double hausdorff(const PointPattern& x, const PointPattern& y) {
  if (x.window() != y.window())
    throw std::invalid_argument("hausdorff: patterns must share one window");
  if (x.empty() && y.empty()) return 0.0;
  if (x.empty() || y.empty()) return x.window().diameter();
  const std::size_t dim = x.window().dim();
  return std::max(directed(x.points(), y.points(), dim),
                  directed(y.points(), x.points(), dim));
}

double d0_cardinality(std::size_t nx, std::size_t ny) {
  const double d = nx > ny ? double(nx - ny) : double(ny - nx);
  return d / (1.0 + d);
}

double d0_hellinger(std::size_t nx, std::size_t ny) {
  if (nx == ny) return 0.0;
  // evaluate on the ordered pair so symmetry holds to the last bit
  const auto [lo, hi] = std::minmax(nx, ny);
  const double s = std::sqrt(double(hi)) - std::sqrt(double(lo));
  return std::sqrt(1.0 - std::exp(-0.5 * s * s));
}

double d0_kl(std::size_t nx, std::size_t ny) {
  if (nx == ny) return 0.0;
  if (nx == 0 || ny == 0) return 1.0;
  // the exponent (ny-nx) log(nx/ny) is symmetric; compute it on the ordered
  // pair so the float result is too
  const auto [lo, hi] = std::minmax(nx, ny);
  const double e = (double(hi) - double(lo)) * std::log(double(hi) / double(lo));
  return 1.0 - std::exp(-e);
}

double d0_cardinality(const PointPattern& x, const PointPattern& y) {
  return d0_cardinality(x.size(), y.size());
}
double d0_hellinger(const PointPattern& x, const PointPattern& y) {
  return d0_hellinger(x.size(), y.size());
}
double d0_kl(const PointPattern& x, const PointPattern& y) {
  return d0_kl(x.size(), y.size());
}

double d0_value(D0Kind kind, std::size_t nx, std::size_t ny) {
  switch (kind) {
    case D0Kind::Cardinality: return d0_cardinality(nx, ny);
    case D0Kind::Hellinger: return d0_hellinger(nx, ny);
    case D0Kind::KullbackLeibler: return d0_kl(nx, ny);
  }
  throw std::invalid_argument("d0_value: unknown kind");
}

PatternMetric::PatternMetric(Window w, bool combined, D0Kind d0)
    : window_(std::move(w)), combined_(combined), d0_(d0) {
  if (combined_ && !(window_.diameter() > 0.0))
    throw std::invalid_argument("PatternMetric: combined form needs positive diameter");
}

double PatternMetric::operator()(const PointPattern& x, const PointPattern& y) const {
  if (x.window() != window_ || y.window() != window_)
    throw std::invalid_argument("PatternMetric: pattern window differs from metric window");
  return from_parts(hausdorff(x, y), x.size(), y.size());
}

double PatternMetric::from_parts(double hausdorff_dist, std::size_t nx, std::size_t ny) const {
  if (!combined_) return hausdorff_dist;
  return hausdorff_dist / window_.diameter() + d0_value(d0_, nx, ny);
}

std::string PatternMetric::name() const {
  if (!combined_) return "KNN_Hausdorff";
  switch (d0_) {
    case D0Kind::Cardinality: return "KNN_Hausdorff_d1";
    case D0Kind::Hellinger: return "KNN_Hausdorff_Hellinger";
    case D0Kind::KullbackLeibler: return "KNN_Hausdorff_KL";
  }
  return "KNN";
}

}  // namespace ppc
