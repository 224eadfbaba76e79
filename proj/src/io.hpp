#ifndef PPC_IO_HPP
#define PPC_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "experiments.hpp"

namespace ppc {

/// Configuration and parse failures; mapped to exit code 2 by the CLI, while
/// other exceptions map to 3 (numeric/invariant failure).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PatternData {
  std::vector<std::string> ids;  // by first appearance
  std::vector<LabeledPattern> patterns;
  bool has_labels = false;
};

/// Reads "pattern_id,x,y[,label]" (d > 2 uses x1..xd). Rows sharing a
/// pattern_id form one pattern, in row order; patterns are ordered by first
/// appearance. Labels must be consistent within an id. If no window is given,
/// the bounding box of all points widened by 1% is used.
PatternData read_patterns(const std::string& path, std::optional<Window> window = {});

void write_patterns(const std::string& path, const std::vector<LabeledPattern>& patterns,
                    const std::vector<std::string>* ids = nullptr, bool with_labels = true);

nlohmann::json result_to_json(const ExperimentResult& result);
nlohmann::json sweep_k_to_json(const SweepKResult& result);
nlohmann::json sweep_sigma_to_json(const SweepSigmaResult& result);
nlohmann::json classify_result_to_json(const ClassifyDatasetResult& result);

/// Result JSON (spec echo, per-classifier rate arrays, means, selected
/// hyperparameters) plus a long-format CSV (classifier,replication,error).
void write_result(const ExperimentResult& result, const std::string& json_path,
                  const std::string& csv_path);

ExperimentSpec parse_experiment_config(const nlohmann::json& j);
DatasetConfig parse_dataset_config(const nlohmann::json& j);

/// CLI entry points. Throw ConfigError for config/parse issues.
void run_simulate(const std::string& scenario, const std::vector<double>& params, int count,
                  std::uint64_t seed, const std::string& out_csv);
void run_estimate(const std::string& in_csv, double sigma, int grid_res,
                  const std::string& out_csv);
void run_bench(const std::string& config_path);
void run_classify(const std::string& train_csv, const std::string& test_csv,
                  const std::string& config_path, const std::string& out_json);

}  // namespace ppc

#endif  // PPC_IO_HPP
