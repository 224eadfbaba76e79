#include "intensity.hpp"

#include <cmath>
#include <stdexcept>

namespace ppc {

KernelSpec::KernelSpec(KernelKind k, double s, int d) : kind(k), sigma(s), dim(d) {
  if (!(sigma > 0.0)) throw std::invalid_argument("KernelSpec: sigma must be positive");
  if (dim < 1) throw std::invalid_argument("KernelSpec: dimension must be positive");
}

double KernelSpec::value(double u) const {
  u = std::abs(u);
  if (kind == KernelKind::Uniform) return u <= 1.0 ? 1.0 : 0.0;
  return std::exp(-0.5 * u * u);
}

double KernelSpec::sigma_pow_d() const { return std::pow(sigma, dim); }

namespace {

// Per-axis kernel weights against grid node coordinates, restricted to the
// cutoff range around x. Returns the closed node-index range.
std::pair<int, int> axis_weights(const Grid& g, const KernelSpec& k, std::size_t axis, double x,
                                 std::vector<double>& w) {
  const double reach = k.cutoff_u() * k.sigma;
  const auto range = g.axis_range(axis, x - reach, x + reach);
  w.clear();
  for (int i = range.first; i <= range.second; ++i) {
    const double d = (g.coord(axis, i) - x) / k.sigma;
    w.push_back(std::exp(-0.5 * d * d));
  }
  return range;
}

// Adds the separable product of per-axis weights into `table` over the box of
// per-axis ranges. Gaussian only.
void scatter_gaussian(const Grid& g, const KernelSpec& k, const Point& p,
                      std::vector<double>& table) {
  const std::size_t d = g.window().dim();
  std::vector<std::vector<double>> w(d);
  std::vector<std::pair<int, int>> range(d);
  for (std::size_t a = 0; a < d; ++a) {
    range[a] = axis_weights(g, k, a, p[a], w[a]);
    if (range[a].first > range[a].second) return;
  }
  // iterate the index box, last axis innermost
  std::vector<int> idx(d);
  for (std::size_t a = 0; a < d; ++a) idx[a] = range[a].first;
  while (true) {
    std::size_t flat = 0;
    double prod = 1.0;
    for (std::size_t a = 0; a < d; ++a) {
      flat = flat * g.res() + idx[a];
      prod *= w[a][idx[a] - range[a].first];
    }
    table[flat] += prod;
    std::size_t a = d;
    while (a-- > 0) {
      if (++idx[a] <= range[a].second) break;
      idx[a] = range[a].first;
      if (a == 0) return;
    }
  }
}

void scatter_uniform(const Grid& g, const KernelSpec& k, const Point& p,
                     std::vector<double>& table) {
  const std::size_t d = g.window().dim();
  const double s2 = k.sigma * k.sigma;
  std::vector<std::pair<int, int>> range(d);
  for (std::size_t a = 0; a < d; ++a) {
    range[a] = g.axis_range(a, p[a] - k.sigma, p[a] + k.sigma);
    if (range[a].first > range[a].second) return;
  }
  std::vector<int> idx(d);
  for (std::size_t a = 0; a < d; ++a) idx[a] = range[a].first;
  while (true) {
    std::size_t flat = 0;
    double d2 = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      flat = flat * g.res() + idx[a];
      const double dd = g.coord(a, idx[a]) - p[a];
      d2 += dd * dd;
    }
    if (d2 <= s2) table[flat] += 1.0;
    std::size_t a = d;
    while (a-- > 0) {
      if (++idx[a] <= range[a].second) break;
      idx[a] = range[a].first;
      if (a == 0) return;
    }
  }
}

void scatter_point(const Grid& g, const KernelSpec& k, const Point& p,
                   std::vector<double>& table) {
  if (k.kind == KernelKind::GaussianRestricted)
    scatter_gaussian(g, k, p, table);
  else
    scatter_uniform(g, k, p, table);
}

}  // namespace

std::shared_ptr<const std::vector<double>> compute_normalizer_table(const Grid& grid,
                                                                    const KernelSpec& kernel) {
  const std::size_t d = grid.window().dim();
  if (static_cast<std::size_t>(kernel.dim) != d)
    throw std::invalid_argument("compute_normalizer_table: kernel dimension mismatch");
  auto table = std::make_shared<std::vector<double>>(grid.node_count(), 0.0);
  const double inv_sd = 1.0 / kernel.sigma_pow_d();

  if (kernel.kind == KernelKind::GaussianRestricted) {
    // K(zeta) factors over axes for the Gaussian on a box grid.
    std::vector<std::vector<double>> rowsum(d);
    for (std::size_t a = 0; a < d; ++a) {
      rowsum[a].assign(grid.res(), 0.0);
      for (int i = 0; i < grid.res(); ++i) {
        double s = 0.0;
        for (int j = 0; j < grid.res(); ++j) {
          const double u = (grid.coord(a, i) - grid.coord(a, j)) / kernel.sigma;
          s += std::exp(-0.5 * u * u);
        }
        rowsum[a][i] = s * grid.step(a);
      }
    }
    for (std::size_t flat = 0; flat < grid.node_count(); ++flat) {
      double prod = inv_sd;
      std::size_t rest = flat;
      for (std::size_t a = d; a-- > 0;) {
        prod *= rowsum[a][rest % grid.res()];
        rest /= grid.res();
      }
      (*table)[flat] = prod;
    }
  } else {
    // direct scatter: each cell contributes its volume to nodes within sigma
    for (std::size_t flat = 0; flat < grid.node_count(); ++flat)
      scatter_uniform(grid, kernel, grid.node(flat), *table);
    for (double& v : *table) v *= inv_sd * grid.cell_volume();
  }
  return table;
}

double estimate_single(const PointPattern& pattern, const KernelSpec& kernel, const Point& zeta,
                       int grid_res) {
  if (!pattern.window().contains(zeta))
    throw std::invalid_argument("estimate_single: zeta outside window");
  if (pattern.empty()) return 0.0;
  const Grid g(pattern.window(), grid_res);
  const double inv_sd = 1.0 / kernel.sigma_pow_d();
  double K = 0.0;
  for (std::size_t i = 0; i < g.node_count(); ++i)
    K += inv_sd * kernel.value(euclidean(zeta, g.node(i)) / kernel.sigma);
  K *= g.cell_volume();
  if (!(K > 0.0)) throw std::runtime_error("estimate_single: normalizer not positive");
  double s = 0.0;
  for (const Point& xi : pattern.points())
    s += inv_sd * kernel.value(euclidean(zeta, xi) / kernel.sigma);
  return s / K;
}

IntensityEstimate::IntensityEstimate(std::vector<PointPattern> replicates, KernelSpec kernel,
                                     int grid_res,
                                     std::shared_ptr<const std::vector<double>> normalizer)
    : replicates_(std::move(replicates)),
      kernel_(kernel),
      grid_(replicates_.empty() ? Window::unit_square() : replicates_.front().window(),
            grid_res),
      normalizer_(std::move(normalizer)) {
  if (replicates_.empty())
    throw std::invalid_argument("IntensityEstimate: empty replicate list");
  for (const auto& p : replicates_)
    if (p.window() != grid_.window())
      throw std::invalid_argument("IntensityEstimate: replicates must share one window");
  if (static_cast<std::size_t>(kernel_.dim) != grid_.window().dim())
    throw std::invalid_argument("IntensityEstimate: kernel dimension mismatch");

  if (!normalizer_) normalizer_ = compute_normalizer_table(grid_, kernel_);
  if (normalizer_->size() != grid_.node_count())
    throw std::invalid_argument("IntensityEstimate: normalizer table size mismatch");
  for (double v : *normalizer_)
    if (!(v > 0.0))
      throw std::runtime_error("IntensityEstimate: normalizer must be strictly positive; "
                               "increase sigma or the grid resolution");

  lambda_.assign(grid_.node_count(), 0.0);
  for (const auto& rep : replicates_)
    for (const Point& xi : rep.points()) scatter_point(grid_, kernel_, xi, lambda_);
  const double scale = 1.0 / (double(replicates_.size()) * kernel_.sigma_pow_d());
  for (std::size_t i = 0; i < lambda_.size(); ++i)
    lambda_[i] *= scale / (*normalizer_)[i];
  mu_hat_ = grid_.integrate(lambda_);
}

double IntensityEstimate::normalizer(const Point& zeta) const {
  if (!grid_.window().contains(zeta))
    throw std::invalid_argument("normalizer: zeta outside window");
  const double inv_sd = 1.0 / kernel_.sigma_pow_d();
  double K = 0.0;
  for (std::size_t i = 0; i < grid_.node_count(); ++i)
    K += inv_sd * kernel_.value(euclidean(zeta, grid_.node(i)) / kernel_.sigma);
  return K * grid_.cell_volume();
}

double IntensityEstimate::normalizer_cached(const Point& zeta) const {
  if (!grid_.window().contains(zeta))
    throw std::invalid_argument("normalizer_cached: zeta outside window");
  return grid_.interpolate(*normalizer_, zeta);
}

double IntensityEstimate::estimate_replicates(const Point& zeta) const {
  if (!grid_.window().contains(zeta))
    throw std::invalid_argument("estimate_replicates: zeta outside window");
  const double inv_K = 1.0 / normalizer_cached(zeta);
  const double inv_sd = 1.0 / kernel_.sigma_pow_d();
  double acc = 0.0;
  for (const auto& rep : replicates_) {
    double s = 0.0;
    for (const Point& xi : rep.points())
      s += kernel_.value(euclidean(zeta, xi) / kernel_.sigma);
    acc += s * inv_sd * inv_K;
  }
  return acc / double(replicates_.size());
}

}  // namespace ppc
