// Every committed scenario config must parse, run, and reach its
// documented expected outcome (PASS).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "proxflow/harness.hpp"

using namespace proxflow;
namespace fs = std::filesystem;

namespace {
const fs::path kConfigDir = PROXFLOW_CONFIG_DIR;

RunReport run_committed(const std::string& name, const fs::path& root) {
  const ScenarioConfig cfg = parse_config_file((kConfigDir / name).string());
  return run_scenario(cfg, root.string());
}
}  // namespace

TEST_CASE("committed scenario configs run and pass") {
  const fs::path root = fs::temp_directory_path() / "proxflow_scenarios";
  fs::remove_all(root);

  for (const std::string name :
       {"aggregate_diskbite.cfg", "sharpness_annulus.cfg", "instability_pacman.cfg",
        "stability_disk.cfg", "particle_count_disk.cfg", "evi_diskbite.cfg",
        "support_growth_halfspace.cfg", "simulate_disk.cfg"}) {
    CAPTURE(name);
    const RunReport report = run_committed(name, root);
    for (const auto& line : report.lines) CAPTURE(line);
    CHECK(report.passed);
  }

  // Spot-check the promised outputs.
  CHECK(fs::exists(root / "aggregate_diskbite" / "trajectory.csv"));
  CHECK(fs::exists(root / "instability_pacman" / "separation.csv"));
  CHECK(fs::exists(root / "stability_disk" / "stability.csv"));
  CHECK(fs::exists(root / "evi_diskbite" / "evi_residuals.csv"));
  CHECK(fs::exists(root / "simulate_disk" / "measure_000000.csv"));

  fs::remove_all(root);
}
