#include "classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ppc {

namespace {

std::vector<double> normalized_priors(std::vector<double> priors) {
  double s = 0.0;
  for (double p : priors) {
    if (!(p > 0.0)) throw std::invalid_argument("BayesClassifier: priors must be positive");
    s += p;
  }
  for (double& p : priors) p /= s;
  return priors;
}

}  // namespace

BayesClassifier::BayesClassifier(Window window, std::vector<ClassModel> models)
    : window_(std::move(window)), models_(std::move(models)) {
  if (models_.empty()) throw std::invalid_argument("BayesClassifier: no classes");
  std::vector<double> priors;
  priors.reserve(models_.size());
  for (const auto& m : models_) priors.push_back(m.prior);
  priors = normalized_priors(std::move(priors));
  const double vol = window_.measure();
  floor_.resize(models_.size());
  for (std::size_t j = 0; j < models_.size(); ++j) {
    models_[j].prior = priors[j];
    floor_[j] = std::max(1e-8 * models_[j].mu / vol, 1e-300);
  }
}

BayesClassifier BayesClassifier::from_estimates(
    std::vector<std::shared_ptr<const IntensityEstimate>> estimates,
    std::vector<double> priors) {
  if (estimates.empty()) throw std::invalid_argument("from_estimates: no classes");
  if (priors.size() != estimates.size())
    throw std::invalid_argument("from_estimates: one prior per class required");
  const Window w = estimates.front()->window();
  std::vector<ClassModel> models;
  models.reserve(estimates.size());
  for (std::size_t j = 0; j < estimates.size(); ++j) {
    auto est = estimates[j];
    if (est->window() != w)
      throw std::invalid_argument("from_estimates: estimates must share one window");
    models.push_back({[est](const Point& p) { return est->lambda_interp(p); },
                      est->integrated(), priors[j]});
  }
  return BayesClassifier(w, std::move(models));
}

BayesClassifier BayesClassifier::from_intensities(const std::vector<IntensitySpec>& specs,
                                                  std::vector<double> priors, int grid_res) {
  if (specs.empty()) throw std::invalid_argument("from_intensities: no classes");
  if (priors.size() != specs.size())
    throw std::invalid_argument("from_intensities: one prior per class required");
  const Window w = specs.front().window;
  std::vector<ClassModel> models;
  models.reserve(specs.size());
  for (std::size_t j = 0; j < specs.size(); ++j) {
    if (specs[j].window != w)
      throw std::invalid_argument("from_intensities: intensities must share one window");
    models.push_back({specs[j].evaluate, integrated_intensity(specs[j], grid_res), priors[j]});
  }
  return BayesClassifier(w, std::move(models));
}

double BayesClassifier::score(const PointPattern& x, int cls) const {
  const auto& m = models_[cls];
  double s = std::log(m.prior) - m.mu;
  for (const Point& xi : x.points())
    s += std::log(std::max(m.lambda(xi), floor_[cls]));
  return s;
}

int BayesClassifier::classify(const PointPattern& x) const {
  int best = 0;
  double best_score = score(x, 0);
  for (int j = 1; j < int(models_.size()); ++j) {
    const double s = score(x, j);
    if (s > best_score) {
      best_score = s;
      best = j;
    }
  }
  return best;
}

int knn_vote(const std::vector<double>& dists, const std::vector<int>& labels, int k,
             int class_count) {
  const std::size_t n = dists.size();
  if (k < 1 || std::size_t(k) > n)
    throw std::invalid_argument("knn_vote: k must lie in [1, training size]");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + k, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return dists[a] != dists[b] ? dists[a] < dists[b] : a < b;
                    });
  std::vector<int> votes(class_count, 0);
  for (int i = 0; i < k; ++i) ++votes[labels[order[i]]];
  int best = 0;
  for (int c = 1; c < class_count; ++c)
    if (votes[c] > votes[best]) best = c;
  return best;
}

KnnClassifier::KnnClassifier(std::vector<LabeledPattern> training, int k, PatternMetric metric)
    : training_(std::move(training)), k_(k), metric_(std::move(metric)) {
  if (training_.empty()) throw std::invalid_argument("KnnClassifier: empty training set");
  if (k_ < 1 || std::size_t(k_) > training_.size())
    throw std::invalid_argument("KnnClassifier: k must lie in [1, training size]");
  class_count_ = max_label(training_) + 1;
  std::vector<int> seen(class_count_, 0);
  for (const auto& lp : training_) {
    if (lp.label < 0) throw std::invalid_argument("KnnClassifier: negative label");
    ++seen[lp.label];
  }
  for (int c = 0; c < class_count_; ++c)
    if (seen[c] == 0)
      throw std::invalid_argument("KnnClassifier: class " + std::to_string(c) +
                                  " has no training pattern");
}

int KnnClassifier::classify(const PointPattern& x) const {
  std::vector<double> dists;
  dists.reserve(training_.size());
  for (const auto& lp : training_) dists.push_back(metric_(x, lp.pattern));
  return classify_from_distances(dists);
}

int KnnClassifier::classify_from_distances(const std::vector<double>& dists) const {
  if (dists.size() != training_.size())
    throw std::invalid_argument("classify_from_distances: size mismatch");
  std::vector<int> labels;
  labels.reserve(training_.size());
  for (const auto& lp : training_) labels.push_back(lp.label);
  return knn_vote(dists, labels, k_, class_count_);
}

}  // namespace ppc
