#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "intensity.hpp"
#include "simulate.hpp"
#include "test_util.hpp"

using namespace ppc;

TEST_CASE("kernel spec validation and values") {
  CHECK_THROWS_AS(KernelSpec(KernelKind::GaussianRestricted, 0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(KernelSpec(KernelKind::GaussianRestricted, 0.1, 0), std::invalid_argument);
  KernelSpec g(KernelKind::GaussianRestricted, 0.5, 2);
  CHECK(g.value(0.0) == 1.0);
  CHECK(g.value(1.0) == doctest::Approx(std::exp(-0.5)));
  CHECK(g.sigma_pow_d() == doctest::Approx(0.25));
  KernelSpec u(KernelKind::Uniform, 0.1, 2);
  CHECK(u.value(0.5) == 1.0);
  CHECK(u.value(1.5) == 0.0);
}

TEST_CASE("normalizer closed forms for the uniform kernel") {
  Window w = Window::unit_square();
  std::vector<PointPattern> reps = {PointPattern(w, {Point(0.5, 0.5)})};
  IntensityEstimate est(reps, KernelSpec(KernelKind::Uniform, 0.1, 2), 512);

  // ball of radius sigma fully inside: K = sigma^-2 * pi sigma^2 = pi
  CHECK(est.normalizer(Point(0.5, 0.5)) == doctest::Approx(std::numbers::pi).epsilon(0.01));
  // corner: only a quarter disc intersects the window
  CHECK(est.normalizer(Point(0.0, 0.0)) == doctest::Approx(std::numbers::pi / 4).epsilon(0.01));
  CHECK_THROWS_AS(est.normalizer(Point(2.0, 2.0)), std::invalid_argument);
}

TEST_CASE("normalizer is exactly nu(S)/sigma^d when the kernel covers the window") {
  Window w = Window::unit_square();
  // uniform kernel with sigma >= diam(S): integrand is constant sigma^-d
  double sigma = w.diameter();
  std::vector<PointPattern> reps = {PointPattern(w, {Point(0.5, 0.5)})};
  IntensityEstimate est(reps, KernelSpec(KernelKind::Uniform, sigma, 2), 64);
  for (auto zeta : {Point(0.5, 0.5), Point(0.0, 0.0), Point(1.0, 0.3)})
    CHECK(est.normalizer(zeta) == doctest::Approx(1.0 / (sigma * sigma)));
}

TEST_CASE("normalizer table refinement and interpolation agreement") {
  Window w = Window::unit_square();
  KernelSpec k(KernelKind::GaussianRestricted, 0.1, 2);
  Grid coarse(w, 64), fine(w, 256);
  auto tc = compute_normalizer_table(coarse, k);
  auto tf = compute_normalizer_table(fine, k);
  for (auto zeta : {Point(0.5, 0.5), Point(0.03, 0.9), Point(0.2, 0.2)}) {
    double vc = coarse.interpolate(*tc, zeta), vf = fine.interpolate(*tf, zeta);
    CHECK(std::abs(vc - vf) / vf < 0.005);
  }
  for (double v : *tc) CHECK(v > 0.0);
}

TEST_CASE("single-realization estimator examples") {
  Window w = Window::unit_square();
  KernelSpec u(KernelKind::Uniform, 0.1, 2);
  CHECK(estimate_single(PointPattern(w, {}), u, Point(0.3, 0.3)) == 0.0);
  // one training point at zeta itself: sigma^-2 k(0) / K = 1/(pi sigma^2)
  double v = estimate_single(PointPattern(w, {Point(0.5, 0.5)}), u, Point(0.5, 0.5), 512);
  CHECK(v == doctest::Approx(1.0 / (std::numbers::pi * 0.01)).epsilon(0.01));
}

TEST_CASE("single-realization estimator is unbiased for constant intensity") {
  auto spec = IntensitySpec([](const Point&) { return 100.0; }, Window::unit_square(), 100.0);
  KernelSpec g(KernelKind::GaussianRestricted, 0.1, 2);
  double total = 0.0;
  const int runs = 500;
  for (int i = 0; i < runs; ++i)
    total += estimate_single(sample_poisson(spec, 3000 + i), g, Point(0.4, 0.6), 64);
  CHECK(std::abs(total / runs - 100.0) / 100.0 < 0.05);
}

TEST_CASE("replicate average of identical patterns equals the single estimate") {
  Window w = Window::unit_square();
  PointPattern p(w, {Point(0.2, 0.8), Point(0.7, 0.7), Point(0.5, 0.1)});
  KernelSpec g(KernelKind::GaussianRestricted, 0.15, 2);
  IntensityEstimate est(std::vector<PointPattern>(5, p), g, 64);
  // at grid nodes the cached normalizer is exact
  const Grid& grid = est.grid();
  for (std::size_t i : {std::size_t(17), grid.node_count() / 2, grid.node_count() - 9})
    CHECK(est.estimate_replicates(grid.node(i)) ==
          doctest::Approx(estimate_single(p, g, grid.node(i), 64)).epsilon(1e-9));
  // off-node the normalizer is interpolated; agreement within its resolution
  for (auto zeta : {Point(0.2, 0.8), Point(0.5, 0.5), Point(0.9, 0.05)})
    CHECK(est.estimate_replicates(zeta) ==
          doctest::Approx(estimate_single(p, g, zeta, 64)).epsilon(0.005));
}

TEST_CASE("replicate average approaches the smoothed intensity") {
  // With a fixed bandwidth the estimator converges to the kernel-smoothed
  // intensity (1/K(zeta)) int sigma^-d k(rho/sigma) lambda dnu, not to lambda
  // itself: at sigma=0.1 the smoothing bias at the smooth0 peak is about 28%.
  auto spec = scenario_intensity("smooth0", {500.0});
  KernelSpec g(KernelKind::GaussianRestricted, 0.1, 2);
  std::vector<PointPattern> reps;
  for (int i = 0; i < 100; ++i) reps.push_back(sample_poisson(spec, split_seed(606, i)));
  IntensityEstimate est100(reps, g, 64);

  Point zeta(0.5, 0.5);
  Grid fine(spec.window, 512);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < fine.node_count(); ++i) {
    double kv = g.value(euclidean(zeta, fine.node(i)) / g.sigma) / g.sigma_pow_d();
    num += kv * spec.evaluate(fine.node(i));
    den += kv;
  }
  double smoothed = num / den;  // about 357 at the peak
  CHECK(std::abs(est100.estimate_replicates(zeta) - smoothed) / smoothed < 0.05);

  // grid-mean absolute error vs the true intensity shrinks with more
  // replicates once averaged over independent runs
  double e10 = 0.0, e100 = 0.0;
  const int runs = 10;
  for (int run = 0; run < runs; ++run) {
    std::vector<PointPattern> r;
    for (int i = 0; i < 100; ++i) r.push_back(sample_poisson(spec, split_seed(split_seed(707, run), i)));
    IntensityEstimate big(r, g, 64);
    IntensityEstimate small(std::vector<PointPattern>(r.begin(), r.begin() + 10), g, 64);
    const Grid& grid = big.grid();
    for (std::size_t i = 0; i < grid.node_count(); ++i) {
      double truth = spec.evaluate(grid.node(i));
      e10 += std::abs(small.lambda_table()[i] - truth);
      e100 += std::abs(big.lambda_table()[i] - truth);
    }
  }
  CHECK(e100 < e10);
}

TEST_CASE("cached grid estimate matches the exact evaluation") {
  auto spec = scenario_intensity("smooth0", {500.0});
  std::vector<PointPattern> reps;
  for (int i = 0; i < 5; ++i) reps.push_back(sample_poisson(spec, 777 + i));
  KernelSpec g(KernelKind::GaussianRestricted, 0.1, 2);
  IntensityEstimate est(reps, g, 64);
  const Grid& grid = est.grid();
  for (std::size_t i : {std::size_t(0), grid.node_count() / 3, grid.node_count() - 1}) {
    Point zeta = grid.node(i);
    CHECK(est.lambda_table()[i] == doctest::Approx(est.estimate_replicates(zeta)).epsilon(1e-6));
  }
}

TEST_CASE("integrated intensity estimates") {
  Window w = Window::unit_square();
  auto spec = IntensitySpec([](const Point&) { return 80.0; }, w, 80.0);
  std::vector<PointPattern> reps;
  for (int i = 0; i < 50; ++i) reps.push_back(sample_poisson(spec, 1234 + i));
  IntensityEstimate est(reps, KernelSpec(KernelKind::GaussianRestricted, 0.1, 2), 64);
  CHECK(std::abs(est.integrated() - 80.0) / 80.0 < 0.05);

  // edge-corrected estimator approximately conserves mass on one replicate
  PointPattern one = sample_poisson(spec, 99);
  IntensityEstimate single({one}, KernelSpec(KernelKind::Uniform, 0.1, 2), 256);
  CHECK(std::abs(single.integrated() - double(one.size())) / double(one.size()) < 0.02);

  IntensityEstimate empty({PointPattern(w, {})},
                          KernelSpec(KernelKind::GaussianRestricted, 0.1, 2), 32);
  CHECK(empty.integrated() == 0.0);
}

TEST_CASE("estimate validation") {
  Window w = Window::unit_square();
  KernelSpec g(KernelKind::GaussianRestricted, 0.1, 2);
  CHECK_THROWS_AS(IntensityEstimate({}, g, 64), std::invalid_argument);
  PointPattern a(w, {}), b(Window::square(0.0, 2.0), {});
  CHECK_THROWS_AS(IntensityEstimate({a, b}, g, 64), std::invalid_argument);
}
