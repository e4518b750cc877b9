// isacnet: ccdf curves, parameter sweeps, fading-fit report and the
// validation suite for the ISAC network model.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isac/commands.hpp"
#include "isac/scenario.hpp"

namespace {

const std::map<std::string, isac::Engine> kEngines = {
    {"analytic", isac::Engine::Analytic}, {"sim", isac::Engine::Sim}, {"both", isac::Engine::Both}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverage analysis and simulation of ISAC networks with DTS"};
  app.require_subcommand(1);

  std::string scenario = "scenarios/default.ini";
  std::string output;
  isac::Engine engine = isac::Engine::Analytic;

  auto* ccdf = app.add_subcommand("ccdf", "ccdf curves of every scenario mode");
  ccdf->add_option("-s,--scenario", scenario, "scenario file")->required();
  ccdf->add_option("-o,--out", output, "output CSV")->required();
  ccdf->add_option("-e,--engine", engine, "analytic, sim or both")
      ->transform(CLI::CheckedTransformer(kEngines, CLI::ignore_case));

  isac::SweepSpec spec;
  std::vector<double> range;
  double k = 0.0;
  auto* sweep = app.add_subcommand("sweep", "ccdf curves over one swept parameter");
  sweep->add_option("-s,--scenario", scenario, "scenario file")->required();
  sweep->add_option("-o,--out", output, "output CSV")->required();
  sweep->add_option("-e,--engine", engine, "analytic, sim or both")
      ->transform(CLI::CheckedTransformer(kEngines, CLI::ignore_case));
  sweep->add_option("--var", spec.variable, "r1, r2, p_h, m_slots or k_total")->required();
  auto* values = sweep->add_option("--values", spec.values, "explicit values")->delimiter(',');
  auto* range_opt = sweep->add_option("--range", range, "start,stop,step (inclusive)")
                        ->delimiter(',')
                        ->expected(3);
  values->excludes(range_opt);
  auto* k_opt = sweep->add_option("--k", k, "k_total: r1 + r2");
  sweep->add_flag("--meters", spec.meters, "distances in metres rather than v");
  sweep->add_flag("--throughput", spec.throughput, "add a log(1 + theta) * value column");

  isac::ValidationOptions vopt;
  std::string out_dir = "validation";
  auto* validate = app.add_subcommand("validate", "run the acceptance criteria");
  validate->add_option("-o,--out-dir", out_dir, "report directory");
  validate->add_option("--seed", vopt.seed, "simulation seed");
  validate->add_option("--trials", vopt.trials, "trials of the agreement campaign");
  validate->add_option("--threads", vopt.threads, "worker threads (0: automatic)");

  long draws = 1000000;
  std::uint64_t seed = 1;
  auto* fit = app.add_subcommand("fit-report", "empirical vs fitted fading cdfs");
  fit->add_option("-o,--out", output, "output CSV")->required();
  fit->add_option("--draws", draws, "samples per quantity");
  fit->add_option("--seed", seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : isac::kExitUsage;
  }

  if (*ccdf) return isac::cmd_ccdf(scenario, output, engine, std::cerr);
  if (*sweep) {
    if (!range.empty()) {
      try {
        spec.values = isac::make_grid(range[0], range[1], range[2]);
      } catch (const std::exception& e) {
        std::cerr << "error: --range: " << e.what() << '\n';
        return isac::kExitUsage;
      }
    }
    if (*k_opt) spec.k = k;
    return isac::cmd_sweep(scenario, spec, output, engine, std::cerr);
  }
  if (*validate) return isac::cmd_validate(out_dir, vopt, std::cerr);
  if (*fit) return isac::cmd_fit_report(output, draws, seed, std::cerr);
  return isac::kExitUsage;
}
