#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "intensity.hpp"
#include "rng.hpp"

namespace ppc {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_double(const std::string& s, int line_no, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line_no) + ": cannot parse " + what + " '" + s +
                      "'");
  }
}

int parse_int(const std::string& s, int line_no, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line_no) + ": cannot parse " + what + " '" + s +
                      "'");
  }
}

void check_keys(const nlohmann::json& j, const std::vector<std::string>& allowed,
                const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ConfigError(where + ": unknown key '" + it.key() + "'");
}

}  // namespace

PatternData read_patterns(const std::string& path, std::optional<Window> window) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("'" + path + "': empty file, header expected");
  const auto header = split_csv(line);
  if (header.size() < 3 || header[0] != "pattern_id")
    throw ConfigError("'" + path + "': header must be pattern_id,x,y[,label] or pattern_id,x1..xd[,label]");
  bool has_labels = header.back() == "label";
  const std::size_t dim = header.size() - 1 - (has_labels ? 1 : 0);
  if (dim < 1) throw ConfigError("'" + path + "': no coordinate columns");

  struct Raw {
    std::vector<Point> points;
    int label = -1;
  };
  std::vector<std::string> ids;
  std::map<std::string, std::size_t> index;
  std::vector<Raw> raws;

  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size())
      throw ConfigError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    std::vector<double> c(dim);
    for (std::size_t a = 0; a < dim; ++a)
      c[a] = parse_double(fields[1 + a], line_no, "coordinate " + header[1 + a]);
    int label = -1;
    if (has_labels) label = parse_int(fields.back(), line_no, "label");

    auto [it, inserted] = index.try_emplace(fields[0], raws.size());
    if (inserted) {
      ids.push_back(fields[0]);
      raws.push_back({});
      raws.back().label = label;
    } else if (has_labels && raws[it->second].label != label) {
      throw ConfigError("inconsistent label for pattern_id '" + fields[0] + "' at line " +
                        std::to_string(line_no));
    }
    raws[it->second].points.push_back(Point(std::move(c)));
  }

  PatternData out;
  out.ids = std::move(ids);
  out.has_labels = has_labels;
  if (raws.empty()) return out;

  Window w = window ? *window : [&] {
    std::vector<double> lo, hi;
    for (const auto& r : raws)
      for (const Point& p : r.points) {
        if (lo.empty()) {
          lo = p.coords;
          hi = p.coords;
          continue;
        }
        for (std::size_t a = 0; a < dim; ++a) {
          lo[a] = std::min(lo[a], p[a]);
          hi[a] = std::max(hi[a], p[a]);
        }
      }
    if (lo.empty()) throw ConfigError("'" + path + "': no points to infer a window from");
    for (std::size_t a = 0; a < dim; ++a) {
      const double side = hi[a] - lo[a];
      const double pad = side > 0.0 ? 0.01 * side : 0.01;
      lo[a] -= pad;
      hi[a] += pad;
    }
    return Window(lo, hi);
  }();
  for (const auto& r : raws)
    out.patterns.push_back({PointPattern(w, r.points), has_labels ? r.label : 0});
  return out;
}

void write_patterns(const std::string& path, const std::vector<LabeledPattern>& patterns,
                    const std::vector<std::string>* ids, bool with_labels) {
  if (ids && ids->size() != patterns.size())
    throw std::invalid_argument("write_patterns: ids/patterns size mismatch");
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  const std::size_t dim = patterns.empty() ? 2 : patterns.front().pattern.window().dim();
  out << "pattern_id,";
  if (dim == 2) {
    out << "x,y";
  } else {
    for (std::size_t a = 0; a < dim; ++a) out << (a ? "," : "") << "x" << (a + 1);
  }
  if (with_labels) out << ",label";
  out << "\n";
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const std::string id = ids ? (*ids)[i] : std::to_string(i);
    for (const Point& p : patterns[i].pattern.points()) {
      out << id;
      for (std::size_t a = 0; a < dim; ++a) out << "," << fmt17(p[a]);
      if (with_labels) out << "," << patterns[i].label;
      out << "\n";
    }
  }
  if (!out) throw ConfigError("error while writing '" + path + "'");
}

namespace {

nlohmann::json window_to_json(const Window& w) {
  return {{"lower", w.lower()}, {"upper", w.upper()}};
}

Window window_from_json(const nlohmann::json& j) {
  check_keys(j, {"lower", "upper"}, "window");
  if (!j.contains("lower") || !j.contains("upper"))
    throw ConfigError("window: lower and upper required");
  try {
    return Window(j.at("lower").get<std::vector<double>>(),
                  j.at("upper").get<std::vector<double>>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("window: ") + e.what());
  }
}

nlohmann::json class_to_json(const ClassSpec& c) {
  if (c.type == ClassSpec::Type::Intensity)
    return {{"type", "intensity"}, {"scenario", c.scenario}, {"params", c.params}};
  return {{"type", "strauss"}, {"beta", c.beta}, {"gamma", c.gamma}, {"r", c.r}};
}

ClassSpec class_from_json(const nlohmann::json& j) {
  ClassSpec c;
  const std::string type = j.value("type", "");
  if (type == "intensity") {
    check_keys(j, {"type", "scenario", "params"}, "class");
    c.type = ClassSpec::Type::Intensity;
    if (!j.contains("scenario")) throw ConfigError("intensity class: scenario required");
    c.scenario = j.at("scenario").get<std::string>();
    c.params = j.value("params", std::vector<double>{});
  } else if (type == "strauss") {
    check_keys(j, {"type", "beta", "gamma", "r"}, "class");
    c.type = ClassSpec::Type::Strauss;
    if (!j.contains("beta") || !j.contains("gamma") || !j.contains("r"))
      throw ConfigError("strauss class: beta, gamma and r required");
    c.beta = j.at("beta").get<double>();
    c.gamma = j.at("gamma").get<double>();
    c.r = j.at("r").get<double>();
  } else {
    throw ConfigError("class: type must be 'intensity' or 'strauss'");
  }
  return c;
}

std::vector<ClassifierKind> classifiers_from_json(const nlohmann::json& j) {
  std::vector<ClassifierKind> out;
  for (const auto& name : j) {
    const auto kind = classifier_from_name(name.get<std::string>());
    if (!kind) throw ConfigError("unknown classifier '" + name.get<std::string>() + "'");
    out.push_back(*kind);
  }
  return out;
}

struct HyperFields {
  bool cv_sigma, share_sigma, cv_k;
  double fixed_sigma;
  int fixed_k;
  std::vector<double> sigma_grid;
  std::vector<int> k_grid;
};

HyperFields parse_hyper(const nlohmann::json& j) {
  HyperFields h{true, true, true, 0.1, 7, {}, {}};
  if (j.contains("sigma")) {
    const auto& s = j.at("sigma");
    check_keys(s, {"policy", "value", "grid", "share"}, "sigma");
    const std::string policy = s.value("policy", "cv");
    if (policy == "fixed") {
      h.cv_sigma = false;
      if (!s.contains("value")) throw ConfigError("sigma: fixed policy requires 'value'");
      h.fixed_sigma = s.at("value").get<double>();
    } else if (policy != "cv") {
      throw ConfigError("sigma: policy must be 'cv' or 'fixed'");
    }
    h.sigma_grid = s.value("grid", std::vector<double>{});
    h.share_sigma = s.value("share", true);
  }
  if (j.contains("k")) {
    const auto& s = j.at("k");
    check_keys(s, {"policy", "value", "grid"}, "k");
    const std::string policy = s.value("policy", "cv");
    if (policy == "fixed") {
      h.cv_k = false;
      if (!s.contains("value")) throw ConfigError("k: fixed policy requires 'value'");
      h.fixed_k = s.at("value").get<int>();
    } else if (policy != "cv") {
      throw ConfigError("k: policy must be 'cv' or 'fixed'");
    }
    h.k_grid = s.value("grid", std::vector<int>{});
  }
  return h;
}

nlohmann::json spec_to_json(const ExperimentSpec& spec) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : spec.classes) classes.push_back(class_to_json(c));
  nlohmann::json names = nlohmann::json::array();
  for (ClassifierKind k : spec.classifiers) names.push_back(classifier_name(k));
  return {{"window", window_to_json(spec.window)},
          {"classes", classes},
          {"train_per_class", spec.train_per_class},
          {"test_per_class", spec.test_per_class},
          {"replications", spec.replications},
          {"classifiers", names},
          {"cv_sigma", spec.cv_sigma},
          {"fixed_sigma", spec.fixed_sigma},
          {"sigma_grid", spec.sigma_grid},
          {"share_sigma", spec.share_sigma},
          {"cv_k", spec.cv_k},
          {"fixed_k", spec.fixed_k},
          {"k_grid", spec.k_grid},
          {"cv_folds", spec.cv_folds},
          {"grid_res", spec.grid_res},
          {"mcmc_steps", spec.mcmc_steps},
          {"seed", spec.master_seed}};
}

}  // namespace

ExperimentSpec parse_experiment_config(const nlohmann::json& j) {
  check_keys(j, {"mode",     "window",     "classes",     "train_per_class", "test_per_class",
                 "replications", "classifiers", "sigma",       "k",               "cv_folds",
                 "grid_res", "mcmc_steps", "seed",        "k_list",          "sigma_list0",
                 "sigma_list1", "out_json", "out_csv"},
             "config");
  ExperimentSpec spec;
  if (j.contains("window")) spec.window = window_from_json(j.at("window"));
  if (!j.contains("classes")) throw ConfigError("config: 'classes' required");
  for (const auto& c : j.at("classes")) spec.classes.push_back(class_from_json(c));
  spec.train_per_class = j.value("train_per_class", 50);
  spec.test_per_class = j.value("test_per_class", 50);
  spec.replications = j.value("replications", 100);
  if (j.contains("classifiers")) spec.classifiers = classifiers_from_json(j.at("classifiers"));
  const HyperFields h = parse_hyper(j);
  spec.cv_sigma = h.cv_sigma;
  spec.fixed_sigma = h.fixed_sigma;
  spec.sigma_grid = h.sigma_grid;
  spec.share_sigma = h.share_sigma;
  spec.cv_k = h.cv_k;
  spec.fixed_k = h.fixed_k;
  spec.k_grid = h.k_grid;
  spec.cv_folds = j.value("cv_folds", 5);
  spec.grid_res = j.value("grid_res", 64);
  spec.mcmc_steps = j.value("mcmc_steps", 20000);
  spec.master_seed = j.value("seed", std::uint64_t(0));
  return spec;
}

DatasetConfig parse_dataset_config(const nlohmann::json& j) {
  check_keys(j, {"window", "classifiers", "sigma", "k", "cv_folds", "grid_res", "seed"},
             "config");
  DatasetConfig cfg;
  if (j.contains("window")) cfg.window = window_from_json(j.at("window"));
  if (j.contains("classifiers")) cfg.classifiers = classifiers_from_json(j.at("classifiers"));
  const HyperFields h = parse_hyper(j);
  cfg.cv_sigma = h.cv_sigma;
  cfg.fixed_sigma = h.fixed_sigma;
  cfg.sigma_grid = h.sigma_grid;
  cfg.share_sigma = h.share_sigma;
  cfg.cv_k = h.cv_k;
  cfg.fixed_k = h.fixed_k;
  cfg.k_grid = h.k_grid;
  cfg.cv_folds = j.value("cv_folds", 5);
  cfg.grid_res = j.value("grid_res", 64);
  cfg.seed = j.value("seed", std::uint64_t(0));
  return cfg;
}

nlohmann::json result_to_json(const ExperimentResult& result) {
  nlohmann::json per = nlohmann::json::object();
  for (const auto& cr : result.classifiers) {
    if (cr.rates.size() != std::size_t(result.spec.replications))
      throw std::runtime_error("result invariant violated: " + classifier_name(cr.kind) +
                               " has " + std::to_string(cr.rates.size()) + " rates for " +
                               std::to_string(result.spec.replications) + " replications");
    per[classifier_name(cr.kind)] = {{"rates", cr.rates},
                                     {"mean", cr.mean},
                                     {cr.hyper_name, cr.hyper}};
  }
  return {{"spec", spec_to_json(result.spec)}, {"results", per}};
}

nlohmann::json sweep_k_to_json(const SweepKResult& r) {
  nlohmann::json table = nlohmann::json::object();
  for (std::size_t mi = 0; mi < r.metrics.size(); ++mi)
    table[classifier_name(r.metrics[mi])] = r.mean_error[mi];
  return {{"ks", r.ks}, {"mean_error", table}};
}

nlohmann::json sweep_sigma_to_json(const SweepSigmaResult& r) {
  return {{"sigmas0", r.sigmas0}, {"sigmas1", r.sigmas1}, {"mean_error", r.mean_error}};
}

nlohmann::json classify_result_to_json(const ClassifyDatasetResult& r) {
  nlohmann::json per = nlohmann::json::object();
  for (const auto& cr : r.classifiers)
    per[classifier_name(cr.kind)] = {{"confusion", cr.confusion},
                                     {"error", cr.error},
                                     {cr.hyper_name, cr.hyper}};
  return {{"classes", r.classes}, {"results", per}};
}

void write_result(const ExperimentResult& result, const std::string& json_path,
                  const std::string& csv_path) {
  const nlohmann::json j = result_to_json(result);  // validates before any write
  {
    std::ofstream out(json_path);
    if (!out) throw ConfigError("cannot write '" + json_path + "'");
    out << j.dump(2) << "\n";
    if (!out) throw ConfigError("error while writing '" + json_path + "'");
  }
  if (csv_path.empty()) return;
  std::ofstream out(csv_path);
  if (!out) throw ConfigError("cannot write '" + csv_path + "'");
  out << "classifier,replication,error\n";
  for (const auto& cr : result.classifiers)
    for (std::size_t i = 0; i < cr.rates.size(); ++i)
      out << classifier_name(cr.kind) << "," << i << "," << fmt17(cr.rates[i]) << "\n";
  if (!out) throw ConfigError("error while writing '" + csv_path + "'");
}

void run_simulate(const std::string& scenario, const std::vector<double>& params, int count,
                  std::uint64_t seed, const std::string& out_csv) {
  if (count <= 0) throw ConfigError("simulate: count must be positive");
  IntensitySpec spec = [&] {
    try {
      return scenario_intensity(scenario, params);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }();
  std::vector<LabeledPattern> pats;
  std::vector<std::string> ids;
  for (int i = 0; i < count; ++i) {
    pats.push_back({sample_poisson(spec, split_seed(seed, std::uint64_t(i))), 0});
    ids.push_back("p" + std::to_string(i));
  }
  write_patterns(out_csv, pats, &ids, /*with_labels=*/false);
}

void run_estimate(const std::string& in_csv, double sigma, int grid_res,
                  const std::string& out_csv) {
  if (!(sigma > 0.0)) throw ConfigError("estimate: sigma must be positive");
  if (grid_res < 2) throw ConfigError("estimate: grid must be >= 2");
  const PatternData data = read_patterns(in_csv);
  if (data.patterns.empty()) throw ConfigError("estimate: no patterns in '" + in_csv + "'");
  std::vector<PointPattern> reps;
  for (const auto& lp : data.patterns) reps.push_back(lp.pattern);
  const Window w = reps.front().window();
  const IntensityEstimate est(std::move(reps),
                              KernelSpec(KernelKind::GaussianRestricted, sigma, int(w.dim())),
                              grid_res);
  std::ofstream out(out_csv);
  if (!out) throw ConfigError("cannot write '" + out_csv + "'");
  const std::size_t dim = w.dim();
  if (dim == 2) {
    out << "x,y,lambda_hat\n";
  } else {
    for (std::size_t a = 0; a < dim; ++a) out << "x" << (a + 1) << ",";
    out << "lambda_hat\n";
  }
  const auto& table = est.lambda_table();
  for (std::size_t i = 0; i < est.grid().node_count(); ++i) {
    const Point p = est.grid().node(i);
    for (std::size_t a = 0; a < dim; ++a) out << fmt17(p[a]) << ",";
    out << fmt17(table[i]) << "\n";
  }
  if (!out) throw ConfigError("error while writing '" + out_csv + "'");
}

void run_bench(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) throw ConfigError("cannot open '" + config_path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("'" + config_path + "': " + e.what());
  }
  const std::string mode = j.value("mode", "experiment");
  const std::string out_json = j.value("out_json", "result.json");
  const std::string out_csv = j.value("out_csv", "");
  const ExperimentSpec spec = parse_experiment_config(j);

  if (mode == "experiment") {
    write_result(run_experiment(spec), out_json, out_csv);
  } else if (mode == "sweep_k") {
    if (!j.contains("k_list")) throw ConfigError("sweep_k: 'k_list' required");
    const auto r = sweep_k(spec, j.at("k_list").get<std::vector<int>>());
    std::ofstream out(out_json);
    if (!out) throw ConfigError("cannot write '" + out_json + "'");
    out << sweep_k_to_json(r).dump(2) << "\n";
  } else if (mode == "sweep_sigma") {
    if (!j.contains("sigma_list0") || !j.contains("sigma_list1"))
      throw ConfigError("sweep_sigma: 'sigma_list0' and 'sigma_list1' required");
    const auto r = sweep_sigma(spec, j.at("sigma_list0").get<std::vector<double>>(),
                               j.at("sigma_list1").get<std::vector<double>>());
    std::ofstream out(out_json);
    if (!out) throw ConfigError("cannot write '" + out_json + "'");
    out << sweep_sigma_to_json(r).dump(2) << "\n";
  } else {
    throw ConfigError("config: unknown mode '" + mode + "'");
  }
}

void run_classify(const std::string& train_csv, const std::string& test_csv,
                  const std::string& config_path, const std::string& out_json) {
  nlohmann::json j = nlohmann::json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open '" + config_path + "'");
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("'" + config_path + "': " + e.what());
    }
  }
  const DatasetConfig cfg = parse_dataset_config(j);
  const PatternData train = read_patterns(train_csv, cfg.window);
  const PatternData test = read_patterns(test_csv, cfg.window);
  if (!train.has_labels) throw ConfigError("classify: training CSV must have a label column");
  if (!test.has_labels) throw ConfigError("classify: test CSV must have a label column");
  if (test.patterns.empty()) throw ConfigError("classify: test CSV '" + test_csv + "' has no patterns");
  const auto result = classify_dataset(train.patterns, test.patterns, cfg);
  std::ofstream out(out_json);
  if (!out) throw ConfigError("cannot write '" + out_json + "'");
  out << classify_result_to_json(result).dump(2) << "\n";
  if (!out) throw ConfigError("error while writing '" + out_json + "'");
}

}  // namespace ppc
