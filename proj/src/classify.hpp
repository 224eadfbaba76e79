#ifndef PPC_CLASSIFY_HPP
#define PPC_CLASSIFY_HPP

#include <functional>
#include <memory>
#include <vector>

#include "core.hpp"
#include "intensity.hpp"
#include "metrics.hpp"
#include "simulate.hpp"

namespace ppc {

/// Plug-in Bayes rule for Poisson classes, scored in the log domain:
///   score_j(x) = log p_j - mu_j(S) + sum_{xi in x} log lambda_j(xi),
/// the class-independent nu(S) term being omitted. Intensities are floored at
/// eps_j = 1e-8 mu_j(S)/nu(S) so the product in the likelihood ratio is never
/// evaluated at zero.
class BayesClassifier {
 public:
  struct ClassModel {
    std::function<double(const Point&)> lambda;
    double mu;
    double prior;
  };

  BayesClassifier(Window window, std::vector<ClassModel> models);

  /// Classes backed by fitted kernel estimates (lambda read off the cached
  /// grid by interpolation).
  static BayesClassifier from_estimates(
      std::vector<std::shared_ptr<const IntensityEstimate>> estimates,
      std::vector<double> priors);

  /// Classes with known analytic intensities; mu_j(S) by quadrature.
  static BayesClassifier from_intensities(const std::vector<IntensitySpec>& specs,
                                          std::vector<double> priors, int grid_res = 64);

  double score(const PointPattern& x, int cls) const;
  /// argmax of the scores; ties go to the smallest class index.
  int classify(const PointPattern& x) const;

  std::size_t class_count() const { return models_.size(); }
  const Window& window() const { return window_; }
  double prior(int cls) const { return models_[cls].prior; }
  double integrated(int cls) const { return models_[cls].mu; }

 private:
  Window window_;
  std::vector<ClassModel> models_;
  std::vector<double> floor_;
};

/// Uniform-vote k-nearest-neighbor rule under a pattern metric. Distance ties
/// break by training index, label ties toward the smaller class, so runs are
/// reproducible.
class KnnClassifier {
 public:
  KnnClassifier(std::vector<LabeledPattern> training, int k, PatternMetric metric);

  int classify(const PointPattern& x) const;
  /// Same rule applied to precomputed distances d(x, training[i]).
  int classify_from_distances(const std::vector<double>& dists) const;

  int k() const { return k_; }
  std::size_t training_size() const { return training_.size(); }
  int class_count() const { return class_count_; }
  const PatternMetric& metric() const { return metric_; }

 private:
  std::vector<LabeledPattern> training_;
  int k_;
  PatternMetric metric_;
  int class_count_;
};

/// Majority vote among the k nearest of `dists` (one per training item),
/// with the deterministic tie-breaking above. Shared by KnnClassifier and the
/// cross-validation loops.
int knn_vote(const std::vector<double>& dists, const std::vector<int>& labels, int k,
             int class_count);

}  // namespace ppc

#endif  // PPC_CLASSIFY_HPP
