#ifndef PPC_CROSSVAL_HPP
#define PPC_CROSSVAL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "classify.hpp"
#include "core.hpp"
#include "metrics.hpp"

namespace ppc {

struct CvConfig {
  int folds = 5;
  bool loo = false;  // leave-one-out overrides `folds`
  std::vector<int> k_grid;
  std::vector<double> sigma_grid;
  bool share_sigma = true;
  std::uint64_t seed = 0;
};

std::vector<int> default_k_grid();
std::vector<double> default_sigma_grid(const Window& w);

/// Stratified fold assignment: indices of each class are shuffled by the seed
/// and dealt round-robin, so folds partition the data and preserve balance.
std::vector<int> stratified_folds(const std::vector<int>& labels, int folds,
                                  std::uint64_t seed);

struct KSelection {
  int k = 1;
  double cv_error = 0.0;
};

/// Grid value of k minimizing mean CV misclassification; ties to the smaller k.
KSelection select_k(const std::vector<LabeledPattern>& training, const PatternMetric& metric,
                    const CvConfig& cfg);

/// Same selection against a caller-supplied distance matrix dist(i, j), used
/// by the experiment harness to share one Hausdorff matrix across metrics.
KSelection select_k_from_matrix(const std::vector<int>& labels,
                                const std::function<double(std::size_t, std::size_t)>& dist,
                                const CvConfig& cfg);

struct SigmaSelection {
  std::vector<double> sigma;  // one per class
  double cv_error = 0.0;
};

/// Bandwidth selection for the Bayes rule by CV classification error. With
/// share_sigma the diagonal of the grid is searched, otherwise the full
/// product grid. Ties go to the lexicographically smaller sigma vector.
SigmaSelection select_sigma(const std::vector<LabeledPattern>& training, KernelKind kernel_kind,
                            int grid_res, const CvConfig& cfg);

}  // namespace ppc

#endif  // PPC_CROSSVAL_HPP
