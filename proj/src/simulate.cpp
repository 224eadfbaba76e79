#include "simulate.hpp"

#include <algorithm>
#include <cmath>

#include "grid.hpp"
#include "rng.hpp"

namespace ppc {

IntensitySpec::IntensitySpec(std::function<double(const Point&)> fn, Window w, double sup,
                             int check_res)
    : evaluate(std::move(fn)), window(std::move(w)), sup_bound(sup) {
  if (!std::isfinite(sup_bound))
    throw std::invalid_argument("IntensitySpec: sup_bound must be finite");
  if (check_res > 1) {
    const Grid g(window, check_res);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      const double v = evaluate(g.node(i));
      if (!(v >= 0.0))
        throw std::invalid_argument("IntensitySpec: intensity negative on the window");
      if (v > sup_bound * 1.1)
        throw std::invalid_argument("IntensitySpec: intensity exceeds sup_bound");
    }
  }
}

IntensitySpec IntensitySpec::from_grid_max(std::function<double(const Point&)> fn, Window w,
                                           int res) {
  const Grid g(w, res);
  double m = 0.0;
  for (std::size_t i = 0; i < g.node_count(); ++i) m = std::max(m, fn(g.node(i)));
  return IntensitySpec(std::move(fn), std::move(w), 1.1 * m, 0);
}

double integrated_intensity(const IntensitySpec& spec, int grid_res) {
  const Grid g(spec.window, grid_res);
  double s = 0.0;
  for (std::size_t i = 0; i < g.node_count(); ++i) s += spec.evaluate(g.node(i));
  return s * g.cell_volume();
}

PointPattern sample_poisson(const IntensitySpec& spec, std::uint64_t seed) {
  if (!(spec.sup_bound > 0.0))
    throw std::invalid_argument("sample_poisson: sup_bound must be positive");
  Rng rng(seed);
  const std::size_t d = spec.window.dim();
  const int n = rng.poisson(spec.sup_bound * spec.window.measure());
  std::vector<Point> kept;
  std::vector<double> c(d);
  for (int i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < d; ++a)
      c[a] = rng.uniform(spec.window.lower()[a], spec.window.upper()[a]);
    Point p(c);
    if (rng.uniform() * spec.sup_bound < spec.evaluate(p)) kept.push_back(std::move(p));
  }
  return PointPattern(spec.window, std::move(kept));
}

namespace {

int neighbors_within(const std::vector<Point>& pts, const Point& p, double r2,
                     std::size_t dim, std::size_t skip) {
  int s = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == skip) continue;
    if (dist2(pts[i].coords.data(), p.coords.data(), dim) < r2) ++s;
  }
  return s;
}

constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);

}  // namespace

int strauss_pair_count(const PointPattern& x, double r) {
  const double r2 = r * r;
  const auto& pts = x.points();
  const std::size_t dim = x.window().dim();
  int s = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (dist2(pts[i].coords.data(), pts[j].coords.data(), dim) < r2) ++s;
  return s;
}

PointPattern sample_strauss(const StraussSpec& spec) {
  if (!(spec.beta > 0.0)) throw std::invalid_argument("sample_strauss: beta must be positive");
  if (!(spec.gamma >= 0.0 && spec.gamma <= 1.0))
    throw std::invalid_argument("sample_strauss: gamma must lie in [0,1]");
  if (!(spec.r > 0.0)) throw std::invalid_argument("sample_strauss: r must be positive");
  if (spec.mcmc_steps <= 0)
    throw std::invalid_argument("sample_strauss: mcmc_steps must be positive");

  Rng rng(spec.rng_seed);
  const Window& w = spec.window;
  const std::size_t d = w.dim();
  const double area = w.measure();
  const double r2 = spec.r * spec.r;

  auto uniform_point = [&]() {
    std::vector<double> c(d);
    for (std::size_t a = 0; a < d; ++a) c[a] = rng.uniform(w.lower()[a], w.upper()[a]);
    return Point(std::move(c));
  };

  // initial state: Poisson(beta) draw
  std::vector<Point> pts;
  {
    const int n0 = rng.poisson(spec.beta * area);
    pts.reserve(n0);
    for (int i = 0; i < n0; ++i) pts.push_back(uniform_point());
  }

  for (int step = 0; step < spec.mcmc_steps; ++step) {
    const double u = rng.uniform();
    const std::size_t n = pts.size();
    if (u < 0.4) {  // birth
      Point p = uniform_point();
      const int s = neighbors_within(pts, p, r2, d, kNoSkip);
      const double accept = spec.beta * area * std::pow(spec.gamma, s) / double(n + 1);
      if (rng.uniform() < accept) pts.push_back(std::move(p));
    } else if (u < 0.8) {  // death
      if (n == 0) continue;
      const std::size_t i = rng.index(n);
      const int s = neighbors_within(pts, pts[i], r2, d, i);
      const double accept = double(n) / (spec.beta * area * std::pow(spec.gamma, s));
      if (rng.uniform() < accept) {
        pts[i] = std::move(pts.back());
        pts.pop_back();
      }
    } else {  // move
      if (n == 0) continue;
      const std::size_t i = rng.index(n);
      Point p = uniform_point();
      const int s_old = neighbors_within(pts, pts[i], r2, d, i);
      const int s_new = neighbors_within(pts, p, r2, d, i);
      const double accept = std::pow(spec.gamma, s_new - s_old);
      if (rng.uniform() < accept) pts[i] = std::move(p);
    }
  }
  return PointPattern(w, std::move(pts));
}

namespace {

double bump(const Point& p, double cx, double cy, double rate) {
  const double dx = p[0] - cx;
  const double dy = p[1] - cy;
  return std::exp(-rate * (dx * dx + dy * dy));
}

double wiggle(const Point& p, double base, double amp) {
  const double xy = p[0] * p[1];
  if (xy == 0.0) return base;  // limit value: |xy sin(1/xy)| <= |xy| -> 0
  return base + amp * xy * std::sin(1.0 / xy);
}

void require_params(const std::string& name, const std::vector<double>& params,
                    std::size_t want) {
  if (params.size() != want)
    throw std::invalid_argument("scenario_intensity: " + name + " expects " +
                                std::to_string(want) + " parameter(s), got " +
                                std::to_string(params.size()));
}

}  // namespace

IntensitySpec scenario_intensity(const std::string& name, const std::vector<double>& params) {
  const Window unit = Window::unit_square();
  if (name == "smooth0") {
    require_params(name, params, 1);
    const double c2 = params[0];
    return IntensitySpec([c2](const Point& p) { return c2 * bump(p, 0.5, 0.5, 20.0); }, unit, c2);
  }
  if (name == "smooth1") {
    require_params(name, params, 2);
    const double c1 = params[0], d1 = params[1];
    if (!(d1 > 0.0)) throw std::invalid_argument("scenario_intensity: smooth1 needs d1 > 0");
    return IntensitySpec([c1, d1](const Point& p) { return c1 * bump(p, 0.5, 0.5, d1); }, unit, c1);
  }
  if (name == "wiggly0") {
    require_params(name, params, 0);
    return IntensitySpec([](const Point& p) { return wiggle(p, 80.0, 80.0); }, unit, 160.0);
  }
  if (name == "wiggly1") {
    require_params(name, params, 1);
    const double c2 = params[0];
    if (!(c2 >= 30.0))
      throw std::invalid_argument("scenario_intensity: wiggly1 needs c2 >= 30 for nonnegativity");
    return IntensitySpec([c2](const Point& p) { return wiggle(p, c2, 30.0); }, unit, c2 + 30.0);
  }
  if (name == "shifted0" || name == "shifted1") {
    std::vector<double> q = params;
    if (q.empty()) q = {300.0, 8.0};
    require_params(name, q, 2);
    const double h = q[0], rate = q[1];
    if (!(h > 0.0 && rate > 0.0))
      throw std::invalid_argument("scenario_intensity: shifted needs positive height and rate");
    const double cx = name == "shifted0" ? -0.25 : 0.0;
    const double cy = name == "shifted0" ? 0.0 : 0.25;
    return IntensitySpec([h, rate, cx, cy](const Point& p) { return h * bump(p, cx, cy, rate); },
                         Window::square(-1.0, 1.0), h);
  }
  throw std::invalid_argument("scenario_intensity: unknown scenario '" + name + "'");
}

}  // namespace ppc
