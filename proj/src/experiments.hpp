#ifndef PPC_EXPERIMENTS_HPP
#define PPC_EXPERIMENTS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "core.hpp"
#include "crossval.hpp"
#include "metrics.hpp"
#include "simulate.hpp"

namespace ppc {

enum class ClassifierKind { Bayes, KnnHausdorff, KnnD1, KnnHellinger, KnnKL };

inline constexpr std::array<ClassifierKind, 5> kAllClassifiers = {
    ClassifierKind::Bayes, ClassifierKind::KnnHausdorff, ClassifierKind::KnnD1,
    ClassifierKind::KnnHellinger, ClassifierKind::KnnKL};

std::string classifier_name(ClassifierKind kind);
std::optional<ClassifierKind> classifier_from_name(const std::string& name);
/// The metric behind a k-NN classifier kind; throws for Bayes.
PatternMetric classifier_metric(ClassifierKind kind, const Window& w);

/// How one class of patterns is generated.
struct ClassSpec {
  enum class Type { Intensity, Strauss };
  Type type = Type::Intensity;
  // Intensity: a scenario name + parameters (see scenario_intensity)
  std::string scenario;
  std::vector<double> params;
  // Strauss
  double beta = 1.0;
  double gamma = 1.0;
  double r = 1.0;
};

struct ExperimentSpec {
  Window window = Window::unit_square();  // used by Strauss classes; intensity
                                          // scenarios carry their own window
  std::vector<ClassSpec> classes;
  int train_per_class = 50;
  int test_per_class = 50;
  int replications = 100;
  std::vector<ClassifierKind> classifiers{kAllClassifiers.begin(), kAllClassifiers.end()};

  // hyperparameter policy
  bool cv_sigma = true;
  double fixed_sigma = 0.1;
  std::vector<double> sigma_grid;  // empty -> default_sigma_grid(window)
  bool share_sigma = true;
  bool cv_k = true;
  int fixed_k = 7;
  std::vector<int> k_grid;  // empty -> default_k_grid()
  int cv_folds = 5;

  int grid_res = 64;
  int mcmc_steps = 20000;
  std::uint64_t master_seed = 0;
};

/// Window shared by every pattern of the experiment; validates that intensity
/// scenarios agree on it.
Window resolve_window(const ExperimentSpec& spec);

struct ClassifierResult {
  ClassifierKind kind;
  std::vector<double> rates;  // one per replication
  double mean = 0.0;
  // selected hyperparameter per replication: k for k-NN, sigma for Bayes
  std::vector<double> hyper;
  std::string hyper_name;
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<ClassifierResult> classifiers;
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

struct SweepKResult {
  std::vector<int> ks;
  std::vector<ClassifierKind> metrics;
  // mean_error[metric][k index]
  std::vector<std::vector<double>> mean_error;
};

/// k-NN error at each fixed k, sharing one Hausdorff matrix per replication.
SweepKResult sweep_k(const ExperimentSpec& spec, const std::vector<int>& ks);

struct SweepSigmaResult {
  std::vector<double> sigmas0;  // class-0 bandwidths (rows)
  std::vector<double> sigmas1;  // class-1 bandwidths (columns)
  // mean_error[i][j] for (sigmas0[i], sigmas1[j])
  std::vector<std::vector<double>> mean_error;
};

/// Bayes error over a bandwidth grid; two-class experiments only.
SweepSigmaResult sweep_sigma(const ExperimentSpec& spec, const std::vector<double>& sigmas0,
                             const std::vector<double>& sigmas1);

struct DatasetConfig {
  std::optional<Window> window;  // inferred as bounding box + 1% margin if absent
  std::vector<ClassifierKind> classifiers{kAllClassifiers.begin(), kAllClassifiers.end()};
  bool cv_sigma = true;
  double fixed_sigma = 0.1;
  std::vector<double> sigma_grid;
  bool share_sigma = true;
  bool cv_k = true;
  int fixed_k = 7;
  std::vector<int> k_grid;
  int cv_folds = 5;
  int grid_res = 64;
  std::uint64_t seed = 0;
};

struct ConfusionResult {
  ClassifierKind kind;
  std::vector<std::vector<std::size_t>> confusion;  // [true][predicted]
  double error = 0.0;
  double hyper = 0.0;
  std::string hyper_name;
};

struct ClassifyDatasetResult {
  int classes = 0;
  std::vector<ConfusionResult> classifiers;
};

/// Fits every requested classifier on `train` and evaluates on `test`.
ClassifyDatasetResult classify_dataset(const std::vector<LabeledPattern>& train,
                                       const std::vector<LabeledPattern>& test,
                                       const DatasetConfig& config);

/// Bounding box of all patterns, widened by 1% of each side.
Window infer_window(const std::vector<const PointPattern*>& patterns);

}  // namespace ppc

#endif  // PPC_EXPERIMENTS_HPP
