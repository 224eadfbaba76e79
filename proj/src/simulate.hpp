#ifndef PPC_SIMULATE_HPP
#define PPC_SIMULATE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core.hpp"

namespace ppc {

/// An intensity function on a window together with a certified upper bound,
/// as needed by the thinning sampler.
struct IntensitySpec {
  std::function<double(const Point&)> evaluate;
  Window window;
  double sup_bound;

  IntensitySpec(std::function<double(const Point&)> fn, Window w, double sup,
                int check_res = 32);

  /// Builds the spec with sup_bound found by grid maximization times a 1.1
  /// safety factor.
  static IntensitySpec from_grid_max(std::function<double(const Point&)> fn, Window w,
                                     int res = 64);
};

/// mu(S) = integral of the intensity over the window, by midpoint quadrature.
double integrated_intensity(const IntensitySpec& spec, int grid_res = 64);

/// Exact inhomogeneous Poisson sampling by thinning a dominating homogeneous
/// process of rate sup_bound. Deterministic given the seed.
PointPattern sample_poisson(const IntensitySpec& spec, std::uint64_t seed);

struct StraussSpec {
  double beta;
  double gamma;  // in [0,1]; gamma <= 1 keeps the density integrable
  double r;
  Window window;
  int mcmc_steps = 20000;
  std::uint64_t rng_seed = 0;
};

/// Birth/death/move Metropolis-Hastings chain targeting the density
/// c beta^n(x) gamma^{s_r(x)} with respect to the unit-rate Poisson process,
/// started from a Poisson(beta) draw. Proposal mix 0.4/0.4/0.2.
PointPattern sample_strauss(const StraussSpec& spec);

/// Number of point pairs closer than r.
int strauss_pair_count(const PointPattern& x, double r);

/// Intensity functions used by the benchmark scenarios:
///   smooth0(c2)        c2 exp(-20((x-1/2)^2+(y-1/2)^2)) on [0,1]^2
///   smooth1(c1,d1)     c1 exp(-d1((x-1/2)^2+(y-1/2)^2)) on [0,1]^2
///   wiggly0()          80 + 80 xy sin(1/(xy)) on [0,1]^2 (value 80 when xy=0)
///   wiggly1(c2)        c2 + 30 xy sin(1/(xy)) on [0,1]^2, c2 >= 30
///   shifted0([h,a])    h exp(-a |p-(-1/4,0)|^2) on [-1,1]^2, default h=300, a=8
///   shifted1([h,a])    same height, centered at (0,1/4)
IntensitySpec scenario_intensity(const std::string& name, const std::vector<double>& params);

}  // namespace ppc

#endif  // PPC_SIMULATE_HPP
