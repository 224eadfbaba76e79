#ifndef PPC_TEST_UTIL_HPP
#define PPC_TEST_UTIL_HPP

#include <algorithm>
#include <limits>
#include <vector>

#include "core.hpp"
#include "rng.hpp"

namespace ppc_test {

/// Uniform pattern with the given number of points; used by property tests.
inline ppc::PointPattern random_pattern(const ppc::Window& w, std::size_t n, ppc::Rng& rng) {
  std::vector<ppc::Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(w.dim());
    for (std::size_t a = 0; a < w.dim(); ++a) c[a] = rng.uniform(w.lower()[a], w.upper()[a]);
    pts.emplace_back(std::move(c));
  }
  return ppc::PointPattern(w, std::move(pts));
}

/// O(#x * #y) reference Hausdorff used to cross-check the library version.
inline double brute_hausdorff(const ppc::PointPattern& x, const ppc::PointPattern& y) {
  if (x.empty() && y.empty()) return 0.0;
  if (x.empty() || y.empty()) return x.window().diameter();
  double h = 0.0;
  for (int dir = 0; dir < 2; ++dir) {
    const auto& a = dir == 0 ? x.points() : y.points();
    const auto& b = dir == 0 ? y.points() : x.points();
    for (const auto& p : a) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : b) best = std::min(best, ppc::euclidean(p, q));
      h = std::max(h, best);
    }
  }
  return h;
}

}  // namespace ppc_test

#endif
