#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "proxflow/dynamics.hpp"
#include "proxflow/geometry.hpp"
#include "proxflow/measures.hpp"
#include "proxflow/potentials.hpp"

namespace proxflow {

enum class ExperimentKind { Simulate, Stability, Aggregate, Sharpness, Instability, EviCheck };

struct ScenarioConfig {
  std::shared_ptr<Domain> domain;
  Potential W, V;
  InitialSpec initial;
  std::optional<InitialSpec> initial2;  // stability / instability pair
  SchemeConfig scheme;
  ExperimentKind experiment = ExperimentKind::Simulate;

  double slack = 1e-2;        // multiplicative envelope slack
  double rate_slack = 0.05;   // additive slack on fitted decay rates
  int evi_n_ref = 20;
  double evi_h = 1e-4;
  double evi_burn_in = 1.0;

  std::string output_dir = "run";
  bool snapshots = false;
  std::uint64_t seed = 0;
  std::optional<std::vector<double>> ladder_radii;
};

// Line-oriented sectioned key-value config; grammar documented in the
// README. Throws ConfigError with the offending file/line/key.
ScenarioConfig parse_config_file(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text, const std::string& origin);

struct RunReport {
  bool passed = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what);
  void note(const std::string& what);
};

// Executes the configured experiment, writes CSV outputs under
// output_root / cfg.output_dir, returns per-assertion PASS/FAIL lines.
RunReport run_scenario(const ScenarioConfig& cfg, const std::string& output_root);

// Fixed-seed property suite across all modules (cone identities,
// prox-inequality sampling, OT oracle equivalence, energy monotonicity,
// scheme consistency). quick trims the sample counts.
RunReport verify_all(bool quick);

std::string default_output_root();

}  // namespace proxflow
