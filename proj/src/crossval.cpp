#include "crossval.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rng.hpp"

namespace ppc {

std::vector<int> default_k_grid() { return {1, 3, 5, 7, 9, 11, 15, 21, 25}; }

std::vector<double> default_sigma_grid(const Window& w) {
  // geometric, 8 values spanning [diam/50, diam/2]
  const double lo = w.diameter() / 50.0;
  const double hi = w.diameter() / 2.0;
  const int n = 8;
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = lo * std::pow(hi / lo, double(i) / double(n - 1));
  return g;
}

std::vector<int> stratified_folds(const std::vector<int>& labels, int folds,
                                  std::uint64_t seed) {
  const std::size_t n = labels.size();
  if (folds < 2 || std::size_t(folds) > n)
    throw std::invalid_argument("stratified_folds: folds must lie in [2, n]");
  const int classes = 1 + *std::max_element(labels.begin(), labels.end());
  std::vector<int> fold(n, -1);
  int next = 0;
  for (int c = 0; c < classes; ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i] == c) idx.push_back(i);
    std::mt19937_64 gen(split_seed(seed, std::uint64_t(c)));
    std::shuffle(idx.begin(), idx.end(), gen);
    for (std::size_t i : idx) fold[i] = (next++) % folds;
  }
  return fold;
}

namespace {

int effective_folds(const CvConfig& cfg, std::size_t n) {
  const int folds = cfg.loo ? int(n) : cfg.folds;
  if (folds < 2 || std::size_t(folds) > n)
    throw std::invalid_argument("cross-validation: folds must lie in [2, training size]");
  return folds;
}

}  // namespace

KSelection select_k_from_matrix(const std::vector<int>& labels,
                                const std::function<double(std::size_t, std::size_t)>& dist,
                                const CvConfig& cfg) {
  const std::size_t n = labels.size();
  if (n == 0) throw std::invalid_argument("select_k: empty training set");
  std::vector<int> k_grid = cfg.k_grid;
  if (k_grid.empty()) throw std::invalid_argument("select_k: empty k grid");
  std::sort(k_grid.begin(), k_grid.end());
  const int folds = effective_folds(cfg, n);
  const int classes = 1 + *std::max_element(labels.begin(), labels.end());
  const std::vector<int> fold = stratified_folds(labels, folds, cfg.seed);

  // smallest per-fold training size bounds the usable k
  std::vector<int> fold_sizes(folds, 0);
  for (int f : fold) ++fold_sizes[f];
  const int min_train = int(n) - *std::max_element(fold_sizes.begin(), fold_sizes.end());
  if (k_grid.back() > min_train)
    throw std::invalid_argument("select_k: grid value " + std::to_string(k_grid.back()) +
                                " exceeds fold training size " + std::to_string(min_train));

  std::vector<std::size_t> errors(k_grid.size(), 0);
  std::vector<std::pair<double, std::size_t>> order;
  for (std::size_t v = 0; v < n; ++v) {
    order.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (fold[i] != fold[v]) order.emplace_back(dist(v, i), i);
    std::sort(order.begin(), order.end());
    std::vector<int> votes(classes, 0);
    std::size_t gi = 0;
    for (std::size_t rank = 0; rank < order.size() && gi < k_grid.size(); ++rank) {
      ++votes[labels[order[rank].second]];
      if (int(rank + 1) == k_grid[gi]) {
        int pred = 0;
        for (int c = 1; c < classes; ++c)
          if (votes[c] > votes[pred]) pred = c;
        if (pred != labels[v]) ++errors[gi];
        ++gi;
      }
    }
  }

  KSelection best{k_grid[0], double(errors[0]) / double(n)};
  for (std::size_t gi = 1; gi < k_grid.size(); ++gi) {
    const double e = double(errors[gi]) / double(n);
    if (e < best.cv_error) best = {k_grid[gi], e};
  }
  return best;
}

KSelection select_k(const std::vector<LabeledPattern>& training, const PatternMetric& metric,
                    const CvConfig& cfg) {
  const std::size_t n = training.size();
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = training[i].label;
  std::vector<double> matrix(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = metric(training[i].pattern, training[j].pattern);
      matrix[i * n + j] = d;
      matrix[j * n + i] = d;
    }
  return select_k_from_matrix(
      labels, [&](std::size_t a, std::size_t b) { return matrix[a * n + b]; }, cfg);
}

SigmaSelection select_sigma(const std::vector<LabeledPattern>& training, KernelKind kernel_kind,
                            int grid_res, const CvConfig& cfg) {
  const std::size_t n = training.size();
  if (n == 0) throw std::invalid_argument("select_sigma: empty training set");
  if (cfg.sigma_grid.empty()) throw std::invalid_argument("select_sigma: empty sigma grid");
  std::vector<double> grid = cfg.sigma_grid;
  std::sort(grid.begin(), grid.end());
  const int folds = effective_folds(cfg, n);
  const int classes = max_label(training) + 1;
  const Window& w = training.front().pattern.window();

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = training[i].label;
  const std::vector<int> fold = stratified_folds(labels, folds, cfg.seed);

  // candidate sigma vectors, lexicographic: diagonal when shared, otherwise
  // the full product grid
  std::vector<std::vector<double>> candidates;
  if (cfg.share_sigma) {
    for (double s : grid) candidates.push_back(std::vector<double>(classes, s));
  } else {
    std::vector<std::size_t> idx(classes, 0);
    bool done = false;
    while (!done) {
      std::vector<double> cand(classes);
      for (int c = 0; c < classes; ++c) cand[c] = grid[idx[c]];
      candidates.push_back(std::move(cand));
      done = true;
      for (int a = classes; a-- > 0;) {
        if (++idx[a] < grid.size()) {
          done = false;
          break;
        }
        idx[a] = 0;
      }
    }
  }

  std::map<double, std::shared_ptr<const std::vector<double>>> normalizers;
  const Grid quad(w, grid_res);
  auto normalizer_for = [&](double sigma) {
    auto it = normalizers.find(sigma);
    if (it != normalizers.end()) return it->second;
    auto t = compute_normalizer_table(quad, KernelSpec(kernel_kind, sigma, int(w.dim())));
    normalizers.emplace(sigma, t);
    return t;
  };

  SigmaSelection best;
  bool have_best = false;
  for (const auto& cand : candidates) {
    std::size_t errors = 0;
    for (int f = 0; f < folds; ++f) {
      std::vector<std::vector<PointPattern>> per_class(classes);
      std::vector<double> priors(classes, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        if (fold[i] == f) continue;
        per_class[labels[i]].push_back(training[i].pattern);
        priors[labels[i]] += 1.0;
      }
      std::vector<std::shared_ptr<const IntensityEstimate>> ests;
      for (int c = 0; c < classes; ++c) {
        if (per_class[c].empty())
          throw std::invalid_argument("select_sigma: class " + std::to_string(c) +
                                      " absent from a training fold");
        ests.push_back(std::make_shared<IntensityEstimate>(
            std::move(per_class[c]), KernelSpec(kernel_kind, cand[c], int(w.dim())), grid_res,
            normalizer_for(cand[c])));
      }
      const BayesClassifier clf = BayesClassifier::from_estimates(std::move(ests), priors);
      for (std::size_t i = 0; i < n; ++i)
        if (fold[i] == f && clf.classify(training[i].pattern) != labels[i]) ++errors;
    }
    const double err = double(errors) / double(n);
    if (!have_best || err < best.cv_error) {
      best = {cand, err};
      have_best = true;
    }
  }
  return best;
}

}  // namespace ppc
