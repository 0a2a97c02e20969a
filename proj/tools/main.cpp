#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "proxflow/errors.hpp"
#include "proxflow/harness.hpp"
#include "proxflow/measures.hpp"
#include "proxflow/transport.hpp"

namespace {

int print_report(const proxflow::RunReport& report) {
  for (const auto& line : report.lines) std::cout << line << "\n";
  std::cout << (report.passed ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
  return report.passed ? 0 : 1;
}

struct ScenarioArgs {
  std::string config_path;
  std::string output_root;
  std::optional<std::uint64_t> seed;
};

int run_config(const ScenarioArgs& args,
               std::optional<proxflow::ExperimentKind> expected_kind) {
  proxflow::ScenarioConfig cfg = proxflow::parse_config_file(args.config_path);
  if (expected_kind && cfg.experiment != *expected_kind)
    throw proxflow::ConfigError(args.config_path +
                                ": experiment.kind does not match this subcommand");
  if (args.seed) {
    cfg.seed = *args.seed;
    if (cfg.initial.recipe == proxflow::InitialSpec::Recipe::Random)
      cfg.initial.seed = *args.seed;
    if (cfg.initial2 && cfg.initial2->recipe == proxflow::InitialSpec::Recipe::Random)
      cfg.initial2->seed = *args.seed + 1;
  }
  const std::string root =
      args.output_root.empty() ? proxflow::default_output_root() : args.output_root;
  return print_report(proxflow::run_scenario(cfg, root));
}

void add_scenario_command(CLI::App& app, const std::string& name,
                          const std::string& description, ScenarioArgs& args,
                          std::optional<proxflow::ExperimentKind> expected_kind,
                          int& exit_code) {
  CLI::App* cmd = app.add_subcommand(name, description);
  cmd->add_option("config", args.config_path, "scenario config file")->required();
  cmd->add_option("--out", args.output_root, "output root (else $PROXFLOW_OUTPUT_ROOT)");
  cmd->add_option("--seed", [&args](const CLI::results_t& res) {
    args.seed = std::stoull(res[0]);
    return true;
  }, "override the config seed");
  cmd->callback([&args, expected_kind, &exit_code] {
    exit_code = run_config(args, expected_kind);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"particle simulator and verification harness for nonlocal-interaction "
               "flows on prox-regular domains"};
  app.require_subcommand(1);
  int exit_code = 0;

  ScenarioArgs simulate_args, aggregate_args, instability_args, evi_args;
  add_scenario_command(app, "simulate", "run a scenario config (any experiment kind)",
                       simulate_args, std::nullopt, exit_code);
  add_scenario_command(app, "aggregate", "run an aggregation scenario", aggregate_args,
                       proxflow::ExperimentKind::Aggregate, exit_code);
  add_scenario_command(app, "instability", "run the non-prox-regular instability demo",
                       instability_args, proxflow::ExperimentKind::Instability, exit_code);
  add_scenario_command(app, "evi", "spot-check the evolution variational inequality",
                       evi_args, proxflow::ExperimentKind::EviCheck, exit_code);

  std::string measure_a, measure_b, plan_out;
  CLI::App* wasserstein =
      app.add_subcommand("wasserstein", "exact W2 distance between two measure CSVs");
  wasserstein->add_option("a", measure_a, "first measure CSV")->required();
  wasserstein->add_option("b", measure_b, "second measure CSV")->required();
  wasserstein->add_option("--plan", plan_out, "write the optimal plan as CSV (i,j,mass)");
  wasserstein->callback([&] {
    const proxflow::ParticleMeasure mu = proxflow::read_measure_csv(measure_a);
    const proxflow::ParticleMeasure nu = proxflow::read_measure_csv(measure_b);
    const proxflow::OTResult res = proxflow::wasserstein2(mu, nu);
    std::cout << std::setprecision(17) << res.distance << "\n";
    if (!plan_out.empty()) {
      std::ofstream out(plan_out);
      out << std::setprecision(17) << "i,j,mass\n";
      for (const auto& e : res.plan.entries)
        out << e.i << "," << e.j << "," << e.mass << "\n";
    }
  });

  bool quick = false;
  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_flag("--quick", quick, "trimmed sample counts");
  verify->callback([&] { exit_code = print_report(proxflow::verify_all(quick)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const proxflow::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
