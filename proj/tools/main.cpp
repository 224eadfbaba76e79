// Command-line front end; all work happens behind the C API in ppclassify.h.
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppclassify.h"

namespace {

int report(ppc_status st) {
  if (st != PPC_OK) std::fprintf(stderr, "error: %s\n", ppc_last_error());
  return int(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point-pattern classification toolkit"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "Sample point patterns from a named scenario");
  std::string scenario, sim_out;
  std::vector<double> params;
  int n = 1;
  std::uint64_t seed = 0;
  sim->add_option("--scenario", scenario, "Scenario name")->required();
  sim->add_option("--params", params, "Scenario parameters");
  sim->add_option("--n", n, "Number of patterns")->required();
  sim->add_option("--seed", seed, "RNG seed")->required();
  sim->add_option("--out", sim_out, "Output CSV path")->required();

  auto* est = app.add_subcommand("estimate", "Export the estimated intensity on a grid");
  std::string est_in, est_out;
  double sigma = 0.0;
  int grid = 64;
  est->add_option("--in", est_in, "Input pattern CSV")->required();
  est->add_option("--sigma", sigma, "Kernel bandwidth")->required();
  est->add_option("--grid", grid, "Grid resolution per axis")->required();
  est->add_option("--out", est_out, "Output CSV path")->required();

  auto* ben = app.add_subcommand("bench", "Run a benchmark experiment from a JSON config");
  std::string ben_cfg;
  ben->add_option("--config", ben_cfg, "Config JSON path")->required();

  auto* cls = app.add_subcommand("classify", "Train on one CSV, classify another");
  std::string train_csv, test_csv, cls_cfg, cls_out;
  cls->add_option("--train", train_csv, "Training CSV (with labels)")->required();
  cls->add_option("--test", test_csv, "Test CSV")->required();
  cls->add_option("--config", cls_cfg, "Config JSON path");
  cls->add_option("--out", cls_out, "Output JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (sim->parsed())
    return report(ppc_simulate(scenario.c_str(), params.data(), int(params.size()), n, seed,
                               sim_out.c_str()));
  if (est->parsed())
    return report(ppc_estimate(est_in.c_str(), sigma, grid, est_out.c_str()));
  if (ben->parsed()) return report(ppc_bench(ben_cfg.c_str()));
  if (cls->parsed())
    return report(ppc_classify(train_csv.c_str(), test_csv.c_str(),
                               cls_cfg.empty() ? nullptr : cls_cfg.c_str(), cls_out.c_str()));
  return 2;
}
