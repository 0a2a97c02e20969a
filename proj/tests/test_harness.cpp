#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "proxflow/harness.hpp"

using namespace proxflow;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kAggregateCfg = R"(
# aggregation on the bitten disk
seed = 5

[domain]
kind = disk_with_bite
radius = 1.0
bite_center = 2.0 0.0
bite_radius = 1.5

[potential.W]
kind = quadratic

[potential.V]
kind = zero

[initial]
recipe = random
n = 12

[scheme]
scheme = catching_up
dt = 0.002
t_end = 0.5
record_every = 25

[experiment]
kind = aggregate

[output]
dir = test_aggregate
)";

}  // namespace

TEST_CASE("config parsing") {
  const ScenarioConfig cfg = parse_config_text(kAggregateCfg, "inline");
  CHECK(cfg.domain->kind_name() == "disk_with_bite");
  CHECK(cfg.domain->eta() == doctest::Approx(1.5));
  CHECK(cfg.W.lambda() == 1.0);
  CHECK(cfg.V.is_zero());
  CHECK(cfg.initial.n == 12);
  CHECK(cfg.initial.seed == 5);  // falls back to the top-level seed
  CHECK(cfg.scheme.dt == doctest::Approx(0.002));
  CHECK(cfg.experiment == ExperimentKind::Aggregate);
  CHECK(cfg.output_dir == "test_aggregate");
}

TEST_CASE("config diagnostics") {
  // Unknown key.
  CHECK_THROWS_AS((void)parse_config_text("[domain]\nkind = ball\nradius = 1\ncentre = 0 0\n"
                                          "[initial]\nrecipe = random\nn = 2\n",
                                          "t"),
                  ConfigError);
  // Unknown section.
  CHECK_THROWS_AS((void)parse_config_text("[dommain]\nkind = ball\n", "t"), ConfigError);
  // Malformed line.
  CHECK_THROWS_AS((void)parse_config_text("[domain]\nkind ball\n", "t"), ConfigError);
  // Duplicate key.
  CHECK_THROWS_AS(
      (void)parse_config_text("[domain]\nkind = ball\nkind = ball\n", "t"), ConfigError);
  // Non-numeric value.
  CHECK_THROWS_AS((void)parse_config_text("[domain]\nkind = ball\ncenter = 0 0\n"
                                          "radius = one\n[initial]\nrecipe = random\nn = 2\n",
                                          "t"),
                  ConfigError);
  // Missing required key.
  CHECK_THROWS_AS((void)parse_config_text("[domain]\nkind = ball\ncenter = 0 0\n", "t"),
                  ConfigError);
}

TEST_CASE("cross-field validation") {
  // aggregate requires V == 0.
  std::string bad = kAggregateCfg;
  bad.replace(bad.find("[potential.V]\nkind = zero"), sizeof("[potential.V]\nkind = zero") - 1,
              "[potential.V]\nkind = quadratic");
  CHECK_THROWS_AS((void)parse_config_text(bad, "t"), ConfigError);

  // pacman is reserved for the instability experiment.
  const char* pacman_sim = R"(
[domain]
kind = pacman_sector
r_max = 1.0
theta_min = 0.785398163397448
theta_max = 5.497787143782138
[initial]
recipe = random
n = 4
[experiment]
kind = simulate
)";
  CHECK_THROWS_AS((void)parse_config_text(pacman_sim, "t"), ConfigError);

  // stability needs a second initial block.
  const char* no_pair = R"(
[domain]
kind = ball
center = 0 0
radius = 1
[initial]
recipe = random
n = 4
[experiment]
kind = stability
)";
  CHECK_THROWS_AS((void)parse_config_text(no_pair, "t"), ConfigError);
}

TEST_CASE("eta override reaches the domain") {
  std::string cfg_text = kAggregateCfg;
  cfg_text.replace(cfg_text.find("bite_radius = 1.5"), sizeof("bite_radius = 1.5") - 1,
                   "bite_radius = 1.5\neta_override = 0.3");
  const ScenarioConfig cfg = parse_config_text(cfg_text, "t");
  CHECK(cfg.domain->eta() == doctest::Approx(0.3));
}

TEST_CASE("run_scenario: aggregate smoke run is deterministic") {
  const fs::path root = fs::temp_directory_path() / "proxflow_harness_test";
  fs::remove_all(root);

  const ScenarioConfig cfg = parse_config_text(kAggregateCfg, "inline");
  const RunReport report = run_scenario(cfg, root.string());
  for (const auto& line : report.lines) CAPTURE(line);
  CHECK(report.passed);
  const fs::path traj = root / "test_aggregate" / "trajectory.csv";
  REQUIRE(fs::exists(traj));
  const std::string first = slurp(traj);

  const RunReport again = run_scenario(cfg, root.string());
  CHECK(again.passed);
  CHECK(slurp(traj) == first);  // bitwise reproducible given the seed

  fs::remove_all(root);
}

TEST_CASE("run_scenario: sharpness and instability smoke runs") {
  const fs::path root = fs::temp_directory_path() / "proxflow_harness_test2";
  fs::remove_all(root);

  std::ostringstream sharp;
  const double eps = 0.1;
  const double c = std::cos(eps), s = std::sin(eps);
  sharp << "[domain]\nkind = annulus_sector\nr_in = 0.9\nr_out = 1.0\n"
        << "theta_min = -0.1\ntheta_max = " << std::setprecision(17) << (3.141592653589793 + eps)
        << "\n[potential.W]\nkind = quadratic\n[potential.V]\nkind = zero\n"
        << "[initial]\nrecipe = explicit\npoints = " << (-(1.0 - eps) * c) << " "
        << (-(1.0 - eps) * s) << " 0.5 ; " << ((1.0 - eps) * c) << " " << (-(1.0 - eps) * s)
        << " 0.5\n[scheme]\ndt = 0.001\nt_end = 0.2\nrecord_every = 10\n"
        << "[experiment]\nkind = sharpness\n[output]\ndir = sharp\n";
  const RunReport sharp_report =
      run_scenario(parse_config_text(sharp.str(), "sharp"), root.string());
  CHECK(sharp_report.passed);

  std::ostringstream instab;
  instab << "[domain]\nkind = pacman_sector\nr_max = 1.0\n"
         << "theta_min = " << std::setprecision(17) << (3.141592653589793 / 4.0)
         << "\ntheta_max = " << (7.0 * 3.141592653589793 / 4.0)
         << "\n[potential.W]\nkind = quadratic\n[potential.V]\nkind = linear_drift\n"
         << "params = -2 0\n"
         << "[initial]\nrecipe = explicit\npoints = 0 1e-6 1\n"
         << "[initial2]\nrecipe = explicit\npoints = 0 -1e-6 1\n"
         << "[scheme]\ndt = 0.01\nt_end = 1.0\nrecord_every = 10\n"
         << "[experiment]\nkind = instability\n[output]\ndir = instab\n";
  const RunReport instab_report =
      run_scenario(parse_config_text(instab.str(), "instab"), root.string());
  for (const auto& line : instab_report.lines) CAPTURE(line);
  CHECK(instab_report.passed);
  CHECK(fs::exists(root / "instab" / "separation.csv"));

  fs::remove_all(root);
}

TEST_CASE("verify_all quick suite") {
  const RunReport report = verify_all(true);
  for (const auto& line : report.lines) CAPTURE(line);
  CHECK(report.passed);
}
