#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "intensity.hpp"
#include "rng.hpp"

namespace ppc {

std::string classifier_name(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::Bayes: return "Bayes";
    case ClassifierKind::KnnHausdorff: return "KNN_Hausdorff";
    case ClassifierKind::KnnD1: return "KNN_Hausdorff_d1";
    case ClassifierKind::KnnHellinger: return "KNN_Hausdorff_Hellinger";
    case ClassifierKind::KnnKL: return "KNN_Hausdorff_KL";
  }
  return "?";
}

std::optional<ClassifierKind> classifier_from_name(const std::string& name) {
  for (ClassifierKind k : kAllClassifiers)
    if (classifier_name(k) == name) return k;
  return std::nullopt;
}

PatternMetric classifier_metric(ClassifierKind kind, const Window& w) {
  switch (kind) {
    case ClassifierKind::KnnHausdorff: return PatternMetric::hausdorff_only(w);
    case ClassifierKind::KnnD1: return PatternMetric::combined(w, D0Kind::Cardinality);
    case ClassifierKind::KnnHellinger: return PatternMetric::combined(w, D0Kind::Hellinger);
    case ClassifierKind::KnnKL: return PatternMetric::combined(w, D0Kind::KullbackLeibler);
    case ClassifierKind::Bayes: break;
  }
  throw std::invalid_argument("classifier_metric: Bayes has no pattern metric");
}

Window resolve_window(const ExperimentSpec& spec) {
  if (spec.classes.empty()) throw std::invalid_argument("ExperimentSpec: no classes");
  std::optional<Window> w;
  for (const auto& cs : spec.classes) {
    if (cs.type != ClassSpec::Type::Intensity) continue;
    const Window sw = scenario_intensity(cs.scenario, cs.params).window;
    if (w && *w != sw)
      throw std::invalid_argument("ExperimentSpec: scenario windows differ");
    w = sw;
  }
  return w ? *w : spec.window;
}

namespace {

struct RepSample {
  std::vector<LabeledPattern> train;
  std::vector<LabeledPattern> test;
};

// Per-replication sampling. Pattern seeds are split from the replication seed
// by a running counter in a fixed order (train by class, then test by class).
RepSample sample_replication(const ExperimentSpec& spec, const Window& w,
                             const std::vector<std::shared_ptr<IntensitySpec>>& intensities,
                             std::uint64_t rep_seed) {
  RepSample out;
  std::uint64_t counter = 0;
  auto draw = [&](int cls) {
    const std::uint64_t seed = split_seed(rep_seed, counter++);
    const ClassSpec& cs = spec.classes[cls];
    if (cs.type == ClassSpec::Type::Intensity)
      return sample_poisson(*intensities[cls], seed);
    StraussSpec ss{cs.beta, cs.gamma, cs.r, w, spec.mcmc_steps, seed};
    return sample_strauss(ss);
  };
  for (int c = 0; c < int(spec.classes.size()); ++c)
    for (int i = 0; i < spec.train_per_class; ++i) out.train.push_back({draw(c), c});
  for (int c = 0; c < int(spec.classes.size()); ++c)
    for (int i = 0; i < spec.test_per_class; ++i) out.test.push_back({draw(c), c});
  return out;
}

std::vector<std::shared_ptr<IntensitySpec>> build_intensities(const ExperimentSpec& spec) {
  std::vector<std::shared_ptr<IntensitySpec>> out(spec.classes.size());
  for (std::size_t c = 0; c < spec.classes.size(); ++c)
    if (spec.classes[c].type == ClassSpec::Type::Intensity)
      out[c] = std::make_shared<IntensitySpec>(
          scenario_intensity(spec.classes[c].scenario, spec.classes[c].params));
  return out;
}

std::vector<double> cross_hausdorff(const std::vector<LabeledPattern>& a,
                                    const std::vector<LabeledPattern>& b) {
  std::vector<double> m(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      m[i * b.size() + j] = hausdorff(a[i].pattern, b[j].pattern);
  return m;
}

std::vector<double> self_hausdorff(const std::vector<LabeledPattern>& a) {
  const std::size_t n = a.size();
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = hausdorff(a[i].pattern, a[j].pattern);
      m[i * n + j] = d;
      m[j * n + i] = d;
    }
  return m;
}

struct BayesFit {
  std::shared_ptr<BayesClassifier> clf;
  std::vector<double> sigma;
};

BayesFit fit_bayes(const std::vector<LabeledPattern>& train, bool cv, double fixed_sigma,
                   std::vector<double> sigma_grid, bool share_sigma, int folds, int grid_res,
                   std::uint64_t seed) {
  const int classes = max_label(train) + 1;
  const Window& w = train.front().pattern.window();
  std::vector<double> sigma(classes, fixed_sigma);
  if (cv) {
    CvConfig cfg;
    cfg.folds = folds;
    cfg.sigma_grid = sigma_grid.empty() ? default_sigma_grid(w) : std::move(sigma_grid);
    cfg.share_sigma = share_sigma;
    cfg.seed = seed;
    sigma = select_sigma(train, KernelKind::GaussianRestricted, grid_res, cfg).sigma;
  }
  std::vector<std::vector<PointPattern>> per_class(classes);
  std::vector<double> priors(classes, 0.0);
  for (const auto& lp : train) {
    per_class[lp.label].push_back(lp.pattern);
    priors[lp.label] += 1.0;
  }
  std::vector<std::shared_ptr<const IntensityEstimate>> ests;
  for (int c = 0; c < classes; ++c) {
    if (per_class[c].empty())
      throw std::invalid_argument("fit_bayes: class " + std::to_string(c) +
                                  " has no training pattern");
    ests.push_back(std::make_shared<IntensityEstimate>(
        std::move(per_class[c]), KernelSpec(KernelKind::GaussianRestricted, sigma[c], int(w.dim())),
        grid_res));
  }
  return {std::make_shared<BayesClassifier>(BayesClassifier::from_estimates(std::move(ests), priors)),
          std::move(sigma)};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  if (spec.classes.size() < 2) throw std::invalid_argument("run_experiment: need >= 2 classes");
  if (spec.train_per_class <= 0 || spec.test_per_class <= 0 || spec.replications <= 0)
    throw std::invalid_argument("run_experiment: sizes and replications must be positive");
  const Window w = resolve_window(spec);
  const auto intensities = build_intensities(spec);

  ExperimentResult result;
  result.spec = spec;
  for (ClassifierKind kind : spec.classifiers) {
    ClassifierResult cr;
    cr.kind = kind;
    cr.hyper_name = kind == ClassifierKind::Bayes ? "sigma" : "k";
    result.classifiers.push_back(std::move(cr));
  }

  const bool any_knn = std::any_of(spec.classifiers.begin(), spec.classifiers.end(),
                                   [](ClassifierKind k) { return k != ClassifierKind::Bayes; });

  for (int rep = 0; rep < spec.replications; ++rep) {
    const std::uint64_t rep_seed = split_seed(spec.master_seed, std::uint64_t(rep));
    RepSample data;
    try {
      data = sample_replication(spec, w, intensities, rep_seed);
    } catch (const std::exception& e) {
      throw std::runtime_error("replication " + std::to_string(rep) + ": " + e.what());
    }
    const std::size_t ntr = data.train.size();
    const std::size_t nte = data.test.size();

    std::vector<int> train_labels(ntr);
    for (std::size_t i = 0; i < ntr; ++i) train_labels[i] = data.train[i].label;
    std::vector<double> h_train, h_test;
    if (any_knn) {
      h_train = self_hausdorff(data.train);
      h_test = cross_hausdorff(data.test, data.train);
    }

    for (auto& cr : result.classifiers) {
      try {
        std::size_t errors = 0;
        if (cr.kind == ClassifierKind::Bayes) {
          const BayesFit fit =
              fit_bayes(data.train, spec.cv_sigma, spec.fixed_sigma, spec.sigma_grid,
                        spec.share_sigma, spec.cv_folds, spec.grid_res,
                        split_seed(rep_seed, 0xB01dULL));
          for (const auto& lp : data.test)
            if (fit.clf->classify(lp.pattern) != lp.label) ++errors;
          cr.hyper.push_back(fit.sigma.front());
        } else {
          const PatternMetric metric = classifier_metric(cr.kind, w);
          int k = spec.fixed_k;
          if (spec.cv_k) {
            CvConfig cfg;
            cfg.folds = spec.cv_folds;
            cfg.k_grid = spec.k_grid.empty() ? default_k_grid() : spec.k_grid;
            cfg.seed = split_seed(rep_seed, 0xCafeULL);
            k = select_k_from_matrix(
                    train_labels,
                    [&](std::size_t a, std::size_t b) {
                      return metric.from_parts(h_train[a * ntr + b], data.train[a].pattern.size(),
                                               data.train[b].pattern.size());
                    },
                    cfg)
                    .k;
          }
          const int classes = max_label(data.train) + 1;
          std::vector<double> dists(ntr);
          for (std::size_t t = 0; t < nte; ++t) {
            for (std::size_t i = 0; i < ntr; ++i)
              dists[i] = metric.from_parts(h_test[t * ntr + i], data.test[t].pattern.size(),
                                           data.train[i].pattern.size());
            if (knn_vote(dists, train_labels, k, classes) != data.test[t].label) ++errors;
          }
          cr.hyper.push_back(double(k));
        }
        cr.rates.push_back(double(errors) / double(nte));
      } catch (const std::exception& e) {
        throw std::runtime_error("replication " + std::to_string(rep) + ", " +
                                 classifier_name(cr.kind) + ": " + e.what());
      }
    }
  }

  for (auto& cr : result.classifiers) {
    double s = 0.0;
    for (double r : cr.rates) s += r;
    cr.mean = cr.rates.empty() ? 0.0 : s / double(cr.rates.size());
  }
  return result;
}

SweepKResult sweep_k(const ExperimentSpec& spec, const std::vector<int>& ks) {
  if (ks.empty()) throw std::invalid_argument("sweep_k: empty k list");
  const Window w = resolve_window(spec);
  const auto intensities = build_intensities(spec);

  SweepKResult out;
  out.ks = ks;
  for (ClassifierKind kind : spec.classifiers)
    if (kind != ClassifierKind::Bayes) out.metrics.push_back(kind);
  if (out.metrics.empty()) throw std::invalid_argument("sweep_k: no k-NN classifiers in spec");
  out.mean_error.assign(out.metrics.size(), std::vector<double>(ks.size(), 0.0));

  for (int rep = 0; rep < spec.replications; ++rep) {
    const std::uint64_t rep_seed = split_seed(spec.master_seed, std::uint64_t(rep));
    const RepSample data = sample_replication(spec, w, intensities, rep_seed);
    const std::size_t ntr = data.train.size();
    const std::size_t nte = data.test.size();
    for (int k : ks)
      if (k < 1 || std::size_t(k) > ntr)
        throw std::invalid_argument("sweep_k: k outside [1, training size]");

    std::vector<int> train_labels(ntr);
    for (std::size_t i = 0; i < ntr; ++i) train_labels[i] = data.train[i].label;
    const int classes = max_label(data.train) + 1;
    const std::vector<double> h_test = cross_hausdorff(data.test, data.train);

    for (std::size_t mi = 0; mi < out.metrics.size(); ++mi) {
      const PatternMetric metric = classifier_metric(out.metrics[mi], w);
      std::vector<double> dists(ntr);
      std::vector<std::size_t> errors(ks.size(), 0);
      for (std::size_t t = 0; t < nte; ++t) {
        for (std::size_t i = 0; i < ntr; ++i)
          dists[i] = metric.from_parts(h_test[t * ntr + i], data.test[t].pattern.size(),
                                       data.train[i].pattern.size());
        for (std::size_t ki = 0; ki < ks.size(); ++ki)
          if (knn_vote(dists, train_labels, ks[ki], classes) != data.test[t].label)
            ++errors[ki];
      }
      for (std::size_t ki = 0; ki < ks.size(); ++ki)
        out.mean_error[mi][ki] += double(errors[ki]) / double(nte) / double(spec.replications);
    }
  }
  return out;
}

SweepSigmaResult sweep_sigma(const ExperimentSpec& spec, const std::vector<double>& sigmas0,
                             const std::vector<double>& sigmas1) {
  if (sigmas0.empty() || sigmas1.empty())
    throw std::invalid_argument("sweep_sigma: empty sigma list");
  if (spec.classes.size() != 2)
    throw std::invalid_argument("sweep_sigma: two-class experiments only");
  const Window w = resolve_window(spec);
  const auto intensities = build_intensities(spec);

  SweepSigmaResult out;
  out.sigmas0 = sigmas0;
  out.sigmas1 = sigmas1;
  out.mean_error.assign(sigmas0.size(), std::vector<double>(sigmas1.size(), 0.0));

  for (int rep = 0; rep < spec.replications; ++rep) {
    const std::uint64_t rep_seed = split_seed(spec.master_seed, std::uint64_t(rep));
    const RepSample data = sample_replication(spec, w, intensities, rep_seed);
    const std::size_t nte = data.test.size();

    std::vector<std::vector<PointPattern>> per_class(2);
    std::vector<double> priors(2, 0.0);
    for (const auto& lp : data.train) {
      per_class[lp.label].push_back(lp.pattern);
      priors[lp.label] += 1.0;
    }

    auto fit_class = [&](int cls, double sigma) {
      return std::make_shared<const IntensityEstimate>(
          per_class[cls], KernelSpec(KernelKind::GaussianRestricted, sigma, int(w.dim())),
          spec.grid_res);
    };
    std::vector<std::shared_ptr<const IntensityEstimate>> fits0, fits1;
    for (double s : sigmas0) fits0.push_back(fit_class(0, s));
    for (double s : sigmas1) fits1.push_back(fit_class(1, s));

    for (std::size_t i = 0; i < sigmas0.size(); ++i)
      for (std::size_t j = 0; j < sigmas1.size(); ++j) {
        const BayesClassifier clf = BayesClassifier::from_estimates({fits0[i], fits1[j]}, priors);
        std::size_t errors = 0;
        for (const auto& lp : data.test)
          if (clf.classify(lp.pattern) != lp.label) ++errors;
        out.mean_error[i][j] += double(errors) / double(nte) / double(spec.replications);
      }
  }
  return out;
}

Window infer_window(const std::vector<const PointPattern*>& patterns) {
  std::optional<std::vector<double>> lo, hi;
  for (const PointPattern* pp : patterns)
    for (const Point& p : pp->points()) {
      if (!lo) {
        lo = p.coords;
        hi = p.coords;
        continue;
      }
      for (std::size_t a = 0; a < p.dim(); ++a) {
        (*lo)[a] = std::min((*lo)[a], p[a]);
        (*hi)[a] = std::max((*hi)[a], p[a]);
      }
    }
  if (!lo) throw std::invalid_argument("infer_window: no points to infer a window from");
  for (std::size_t a = 0; a < lo->size(); ++a) {
    const double side = (*hi)[a] - (*lo)[a];
    const double pad = side > 0.0 ? 0.01 * side : 0.01;
    (*lo)[a] -= pad;
    (*hi)[a] += pad;
  }
  return Window(*lo, *hi);
}

namespace {

std::vector<LabeledPattern> rewindow(const std::vector<LabeledPattern>& in, const Window& w) {
  std::vector<LabeledPattern> out;
  out.reserve(in.size());
  for (const auto& lp : in) out.push_back({PointPattern(w, lp.pattern.points()), lp.label});
  return out;
}

}  // namespace

ClassifyDatasetResult classify_dataset(const std::vector<LabeledPattern>& train_in,
                                       const std::vector<LabeledPattern>& test_in,
                                       const DatasetConfig& config) {
  if (train_in.empty()) throw std::invalid_argument("classify_dataset: empty training set");
  if (test_in.empty()) throw std::invalid_argument("classify_dataset: empty test set");

  Window w = config.window ? *config.window : [&] {
    std::vector<const PointPattern*> all;
    for (const auto& lp : train_in) all.push_back(&lp.pattern);
    for (const auto& lp : test_in) all.push_back(&lp.pattern);
    return infer_window(all);
  }();
  const std::vector<LabeledPattern> train = rewindow(train_in, w);
  const std::vector<LabeledPattern> test = rewindow(test_in, w);

  const int classes = max_label(train) + 1;
  for (const auto& lp : test)
    if (lp.label < 0 || lp.label >= classes)
      throw std::invalid_argument("classify_dataset: test class " + std::to_string(lp.label) +
                                  " absent from the training set");

  ClassifyDatasetResult out;
  out.classes = classes;
  const std::size_t ntr = train.size();
  std::vector<int> train_labels(ntr);
  for (std::size_t i = 0; i < ntr; ++i) train_labels[i] = train[i].label;

  const bool any_knn = std::any_of(config.classifiers.begin(), config.classifiers.end(),
                                   [](ClassifierKind k) { return k != ClassifierKind::Bayes; });
  std::vector<double> h_train, h_test;
  if (any_knn) {
    h_train = self_hausdorff(train);
    h_test = cross_hausdorff(test, train);
  }

  for (ClassifierKind kind : config.classifiers) {
    ConfusionResult cr;
    cr.kind = kind;
    cr.confusion.assign(classes, std::vector<std::size_t>(classes, 0));
    if (kind == ClassifierKind::Bayes) {
      const BayesFit fit = fit_bayes(train, config.cv_sigma, config.fixed_sigma,
                                     config.sigma_grid, config.share_sigma, config.cv_folds,
                                     config.grid_res, split_seed(config.seed, 0xB01dULL));
      for (const auto& lp : test) ++cr.confusion[lp.label][fit.clf->classify(lp.pattern)];
      cr.hyper = fit.sigma.front();
      cr.hyper_name = "sigma";
    } else {
      const PatternMetric metric = classifier_metric(kind, w);
      int k = config.fixed_k;
      if (config.cv_k) {
        CvConfig cfg;
        cfg.folds = config.cv_folds;
        cfg.k_grid = config.k_grid.empty() ? default_k_grid() : config.k_grid;
        cfg.seed = split_seed(config.seed, 0xCafeULL);
        k = select_k_from_matrix(
                train_labels,
                [&](std::size_t a, std::size_t b) {
                  return metric.from_parts(h_train[a * ntr + b], train[a].pattern.size(),
                                           train[b].pattern.size());
                },
                cfg)
                .k;
      }
      std::vector<double> dists(ntr);
      for (std::size_t t = 0; t < test.size(); ++t) {
        for (std::size_t i = 0; i < ntr; ++i)
          dists[i] = metric.from_parts(h_test[t * ntr + i], test[t].pattern.size(),
                                       train[i].pattern.size());
        ++cr.confusion[test[t].label][knn_vote(dists, train_labels, k, classes)];
      }
      cr.hyper = double(k);
      cr.hyper_name = "k";
    }
    std::size_t wrong = 0;
    for (int a = 0; a < classes; ++a)
      for (int b = 0; b < classes; ++b)
        if (a != b) wrong += cr.confusion[a][b];
    cr.error = double(wrong) / double(test.size());
    out.classifiers.push_back(std::move(cr));
  }
  return out;
}

}  // namespace ppc
