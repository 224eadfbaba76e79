#ifndef PPC_METRICS_HPP
#define PPC_METRICS_HPP

#include <cstddef>
#include <string>

#include "core.hpp"

namespace ppc {

/// Hausdorff distance between the point sets of two patterns sharing a window.
/// Convention for empty patterns: d_H(empty, empty) = 0 and
/// d_H(empty, y) = diam(S) for nonempty y, which keeps d_H bounded by diam(S)
/// and preserves the metric axioms on the box.
double hausdorff(const PointPattern& x, const PointPattern& y);

/// Cardinality-only penalty terms added to the scaled Hausdorff distance.
double d0_cardinality(std::size_t nx, std::size_t ny);
double d0_hellinger(std::size_t nx, std::size_t ny);
/// One-sided zero cardinality makes the log undefined; we return the maximal
/// penalty 1 in that case (both zero gives 0).
double d0_kl(std::size_t nx, std::size_t ny);

double d0_cardinality(const PointPattern& x, const PointPattern& y);
double d0_hellinger(const PointPattern& x, const PointPattern& y);
double d0_kl(const PointPattern& x, const PointPattern& y);

enum class D0Kind { Cardinality, Hellinger, KullbackLeibler };

double d0_value(D0Kind kind, std::size_t nx, std::size_t ny);

/// A distance on point patterns: plain Hausdorff, or the combined form
/// d(x,y) = d_H(x,y)/diam(S) + d0(x,y).
class PatternMetric {
 public:
  static PatternMetric hausdorff_only(Window w) { return PatternMetric(std::move(w), false, D0Kind::Cardinality); }
  static PatternMetric combined(Window w, D0Kind d0) { return PatternMetric(std::move(w), true, d0); }

  double operator()(const PointPattern& x, const PointPattern& y) const;

  /// Distance reconstructed from a precomputed Hausdorff value and the two
  /// cardinalities; used to share one Hausdorff matrix across metric variants.
  double from_parts(double hausdorff_dist, std::size_t nx, std::size_t ny) const;

  bool is_combined() const { return combined_; }
  D0Kind d0_kind() const { return d0_; }
  const Window& window() const { return window_; }
  std::string name() const;

 private:
  PatternMetric(Window w, bool combined, D0Kind d0);

  Window window_;
  bool combined_;
  D0Kind d0_;
};

}  // namespace ppc

#endif  // PPC_METRICS_HPP
