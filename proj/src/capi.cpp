#include "ppclassify.h"

#include <string>

#include "core.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "simulate.hpp"

namespace {

thread_local std::string g_last_error;

struct PatternWrap {
  ppc::PointPattern pattern;
};

template <class F>
ppc_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return PPC_OK;
  } catch (const ppc::ConfigError& e) {
    g_last_error = e.what();
    return PPC_ERR_CONFIG;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PPC_ERR_NUMERIC;
  }
}

}  // namespace

struct ppc_pattern : PatternWrap {};

extern "C" {

const char* ppc_last_error(void) { return g_last_error.c_str(); }

ppc_status ppc_pattern_create(const double* lower, const double* upper, int dim,
                              const double* coords, int n_points, ppc_pattern** out) {
  return guard([&] {
    if (!lower || !upper || dim < 1 || n_points < 0 || !out || (n_points > 0 && !coords))
      throw std::invalid_argument("ppc_pattern_create: bad arguments");
    ppc::Window w(std::vector<double>(lower, lower + dim),
                  std::vector<double>(upper, upper + dim));
    std::vector<ppc::Point> pts;
    pts.reserve(n_points);
    for (int i = 0; i < n_points; ++i)
      pts.emplace_back(std::vector<double>(coords + i * dim, coords + (i + 1) * dim));
    *out = new ppc_pattern{{ppc::PointPattern(std::move(w), std::move(pts))}};
  });
}

void ppc_pattern_free(ppc_pattern* p) { delete p; }

int ppc_pattern_size(const ppc_pattern* p) { return p ? int(p->pattern.size()) : -1; }

int ppc_pattern_dim(const ppc_pattern* p) { return p ? int(p->pattern.window().dim()) : -1; }

ppc_status ppc_pattern_coords(const ppc_pattern* p, double* buf) {
  return guard([&] {
    if (!p || !buf) throw std::invalid_argument("ppc_pattern_coords: bad arguments");
    for (const ppc::Point& pt : p->pattern.points())
      for (double c : pt.coords) *buf++ = c;
  });
}

ppc_status ppc_pattern_distance(const ppc_pattern* x, const ppc_pattern* y, int d0_kind,
                                double* out) {
  return guard([&] {
    if (!x || !y || !out) throw std::invalid_argument("ppc_pattern_distance: bad arguments");
    ppc::PatternMetric metric = [&] {
      switch (d0_kind) {
        case -1: return ppc::PatternMetric::hausdorff_only(x->pattern.window());
        case 0: return ppc::PatternMetric::combined(x->pattern.window(), ppc::D0Kind::Cardinality);
        case 1: return ppc::PatternMetric::combined(x->pattern.window(), ppc::D0Kind::Hellinger);
        case 2:
          return ppc::PatternMetric::combined(x->pattern.window(),
                                              ppc::D0Kind::KullbackLeibler);
        default: throw std::invalid_argument("ppc_pattern_distance: d0_kind must be -1..2");
      }
    }();
    *out = metric(x->pattern, y->pattern);
  });
}

ppc_status ppc_sample_scenario(const char* scenario, const double* params, int n_params,
                               uint64_t seed, ppc_pattern** out) {
  return guard([&] {
    if (!scenario || !out || n_params < 0 || (n_params > 0 && !params))
      throw std::invalid_argument("ppc_sample_scenario: bad arguments");
    const auto spec =
        ppc::scenario_intensity(scenario, std::vector<double>(params, params + n_params));
    *out = new ppc_pattern{{ppc::sample_poisson(spec, seed)}};
  });
}

ppc_status ppc_sample_strauss(const double* lower, const double* upper, int dim, double beta,
                              double gamma, double r, int mcmc_steps, uint64_t seed,
                              ppc_pattern** out) {
  return guard([&] {
    if (!lower || !upper || dim < 1 || !out)
      throw std::invalid_argument("ppc_sample_strauss: bad arguments");
    ppc::StraussSpec spec{beta, gamma, r,
                          ppc::Window(std::vector<double>(lower, lower + dim),
                                      std::vector<double>(upper, upper + dim)),
                          mcmc_steps, seed};
    *out = new ppc_pattern{{ppc::sample_strauss(spec)}};
  });
}

ppc_status ppc_simulate(const char* scenario, const double* params, int n_params, int count,
                        uint64_t seed, const char* out_csv) {
  return guard([&] {
    if (!scenario || !out_csv || n_params < 0 || (n_params > 0 && !params))
      throw ppc::ConfigError("ppc_simulate: bad arguments");
    ppc::run_simulate(scenario, std::vector<double>(params, params + n_params), count, seed,
                      out_csv);
  });
}

ppc_status ppc_estimate(const char* in_csv, double sigma, int grid_res, const char* out_csv) {
  return guard([&] {
    if (!in_csv || !out_csv) throw ppc::ConfigError("ppc_estimate: bad arguments");
    ppc::run_estimate(in_csv, sigma, grid_res, out_csv);
  });
}

ppc_status ppc_bench(const char* config_json) {
  return guard([&] {
    if (!config_json) throw ppc::ConfigError("ppc_bench: bad arguments");
    ppc::run_bench(config_json);
  });
}

ppc_status ppc_classify(const char* train_csv, const char* test_csv, const char* config_json,
                        const char* out_json) {
  return guard([&] {
    if (!train_csv || !test_csv || !out_json)
      throw ppc::ConfigError("ppc_classify: bad arguments");
    ppc::run_classify(train_csv, test_csv, config_json ? config_json : "", out_json);
  });
}

}  // extern "C"
