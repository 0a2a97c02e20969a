#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "proxflow/errors.hpp"
#include "proxflow/harness.hpp"
#include "proxflow/rng.hpp"
#include "proxflow/transport.hpp"

namespace proxflow {

void RunReport::check(bool ok, const std::string& what) {
  lines.push_back(std::string(ok ? "[PASS] " : "[FAIL] ") + what);
  passed = passed && ok;
}

void RunReport::note(const std::string& what) { lines.push_back("[info] " + what); }

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

fs::path prepare_outdir(const ScenarioConfig& cfg, const std::string& root) {
  fs::path dir = fs::path(root) / cfg.output_dir;
  fs::create_directories(dir);
  return dir;
}

void write_trajectory_csv(const fs::path& dir, const Trajectory& traj) {
  std::ofstream out(dir / "trajectory.csv");
  out << std::setprecision(17);
  out << "t,energy,dissipation,dw_singleton,support_radius\n";
  for (const auto& r : traj.records)
    out << r.t << "," << r.energy << "," << r.dissipation << "," << r.dw_singleton << ","
        << r.support_radius << "\n";
}

void write_snapshots(const fs::path& dir, const Trajectory& traj) {
  int k = 0;
  for (const auto& r : traj.records) {
    std::ostringstream name;
    name << "measure_" << std::setw(6) << std::setfill('0') << k++ << ".csv";
    write_measure_csv((dir / name.str()).string(), r.measure);
  }
}

// Generous per-step energy increase budget: the scheme may overshoot the
// exact dissipation balance by O(dt^2) with a curvature constant.
double energy_step_slack(const ScenarioConfig& cfg, double r_support) {
  const double b = cfg.W.grad_sup_bound(2.0 * r_support) + cfg.V.grad_sup_bound(r_support);
  double curvature = 1.0 + b * b;
  if (cfg.domain->prox_regular() && cfg.domain->eta() < kInf)
    curvature *= 1.0 + 2.0 * b / cfg.domain->eta();
  return 10.0 * cfg.scheme.dt * cfg.scheme.dt * curvature;
}

ParticleMeasure random_measure_in(const Domain& domain, int n, Rng& rng) {
  const auto [lo, hi] = domain.sampling_box();
  ParticleMeasure nu;
  for (int i = 0; i < n; ++i) {
    Vec p(lo.dim());
    int tries = 0;
    do {
      p = rng.uniform_in_box(lo, hi);
    } while (!domain.contains(p) && ++tries < 100000);
    if (!domain.contains(p)) throw EmptySample("random reference measure sampling failed");
    nu.positions.push_back(std::move(p));
    nu.masses.push_back(rng.uniform(0.5, 1.5));
  }
  double sum = 0.0;
  for (double m : nu.masses) sum += m;
  for (double& m : nu.masses) m /= sum;
  return nu;
}

void run_simulate(const ScenarioConfig& cfg, const fs::path& dir, RunReport& report) {
  const ParticleMeasure mu0 = discretize_initial(cfg.initial, *cfg.domain);
  const Trajectory traj =
      simulate(mu0, cfg.scheme, *cfg.domain, cfg.W, cfg.V, cfg.snapshots);
  write_trajectory_csv(dir, traj);
  if (cfg.snapshots) write_snapshots(dir, traj);
  report.check(true, "feasibility maintained over " +
                         std::to_string(traj.final_state.step_count) + " steps");

  const double r_support =
      cfg.domain->bounded() ? cfg.domain->circumradius()
                            : support_radius_bound(mu0.support_radius(),
                                                   support_growth_constant(cfg.W, cfg.V),
                                                   cfg.scheme.t_end);
  const double slack = energy_step_slack(cfg, r_support);
  bool monotone = true;
  for (std::size_t k = 1; k < traj.records.size(); ++k) {
    const double steps_between =
        std::max(1.0, std::round((traj.records[k].t - traj.records[k - 1].t) / cfg.scheme.dt));
    if (traj.records[k].energy > traj.records[k - 1].energy + slack * steps_between)
      monotone = false;
  }
  report.check(monotone, "energy non-increasing within the O(dt^2) per-step budget");

  if (!cfg.domain->bounded()) {
    const double c = support_growth_constant(cfg.W, cfg.V);
    bool inside = true;
    for (const auto& r : traj.records)
      if (r.support_radius > support_radius_bound(mu0.support_radius(), c, r.t) + tol_num)
        inside = false;
    report.check(inside, "support radius within (r0+1)exp(" + fmt(c) + " t)");
  }
  if (cfg.ladder_radii) {
    ConvexityLadder ladder = ConvexityLadder::build(cfg.W, cfg.V, *cfg.ladder_radii);
    const int level =
        ladder.level_for(traj.final_state.measure.support_radius(), cfg.W, cfg.V);
    report.note("convexity ladder level " + std::to_string(level) + " covers the run: "
                "lambda_W=" + fmt(ladder.lambdas_W[level]) +
                " lambda_V=" + fmt(ladder.lambdas_V[level]));
  }
}

void write_pair_series(const fs::path& dir, const StabilityReport& rep) {
  std::ofstream out(dir / "stability.csv");
  out << std::setprecision(17);
  out << "t,measured,envelope\n";
  for (const auto& p : rep.series)
    out << p.t << "," << p.measured << "," << p.envelope << "\n";
}

void run_stability(const ScenarioConfig& cfg, const fs::path& dir, RunReport& report) {
  const ParticleMeasure mu1 = discretize_initial(cfg.initial, *cfg.domain);
  const ParticleMeasure mu2 = discretize_initial(*cfg.initial2, *cfg.domain);
  const StabilityReport rep =
      stability_experiment(mu1, mu2, cfg.scheme, *cfg.domain, cfg.W, cfg.V);
  write_pair_series(dir, rep);
  report.note("contraction exponent kappa = " + fmt(rep.kappa) +
              ", d_W(0) = " + fmt(rep.dw0));
  report.check(!rep.violated, "d_W(mu1(t), mu2(t)) <= exp(kappa t) d_W(0) * (1 + 1e-2) "
                              "at all record points (max ratio " +
                                  fmt(rep.max_ratio) + ")");
}

void run_aggregate(const ScenarioConfig& cfg, const fs::path& dir, RunReport& report) {
  const ParticleMeasure mu0 = discretize_initial(cfg.initial, *cfg.domain);
  const Trajectory traj = simulate(mu0, cfg.scheme, *cfg.domain, cfg.W, cfg.V, false);
  write_trajectory_csv(dir, traj);

  const double kappa = aggregation_exponent(cfg.W, *cfg.domain);
  report.note("aggregation exponent C(Omega) = " + fmt(kappa) +
              " (eta = " + fmt(cfg.domain->eta()) +
              ", Diam = " + fmt(cfg.domain->diameter()) + ")");
  const double dw0 = traj.records.front().dw_singleton;

  bool envelope_ok = true;
  double max_ratio = 0.0;
  for (const auto& r : traj.records) {
    const double envelope = dw0 * std::exp(kappa * r.t);
    if (envelope > 1e-15) {
      max_ratio = std::max(max_ratio, r.dw_singleton / envelope);
      if (r.dw_singleton > envelope * (1.0 + cfg.slack)) envelope_ok = false;
    } else if (r.dw_singleton > 1e-12) {
      envelope_ok = false;
    }
  }
  report.check(envelope_ok, "d_W(mu(t), Xi) <= d_W(mu0, Xi) exp(C(Omega) t) * (1 + " +
                                fmt(cfg.slack) + ") (max ratio " + fmt(max_ratio) + ")");

  std::vector<std::pair<double, double>> series;
  for (const auto& r : traj.records)
    if (r.dw_singleton > 1e-14) series.emplace_back(r.t, r.dw_singleton);
  if (series.size() >= 3) {
    const double rate = fit_decay_rate(series);
    report.check(rate <= kappa + cfg.rate_slack,
                 "fitted decay rate " + fmt(rate) + " <= C(Omega) + " + fmt(cfg.rate_slack));
  } else {
    report.check(true, "aggregation collapsed to a singleton too fast to fit a rate");
  }
}

void run_sharpness(const ScenarioConfig& cfg, const fs::path& dir, RunReport& report) {
  const ParticleMeasure mu0 = discretize_initial(cfg.initial, *cfg.domain);
  SchemeConfig scheme = cfg.scheme;
  scheme.record_every = 1;
  const Trajectory traj = simulate(mu0, scheme, *cfg.domain, cfg.W, cfg.V, true);
  write_trajectory_csv(dir, traj);

  double max_dissipation = 0.0, max_displacement = 0.0, min_dw_increment = 0.0;
  for (std::size_t k = 0; k < traj.records.size(); ++k) {
    const auto& r = traj.records[k];
    max_dissipation = std::max(max_dissipation, r.dissipation);
    for (int i = 0; i < mu0.size(); ++i)
      max_displacement =
          std::max(max_displacement, dist(r.measure.positions[i], mu0.positions[i]));
    if (k > 0)
      min_dw_increment = std::min(
          min_dw_increment, r.dw_singleton - traj.records[k - 1].dw_singleton);
  }
  report.check(max_dissipation < 1e-10,
               "stationary configuration: dissipation " + fmt(max_dissipation) + " < 1e-10");
  report.check(max_displacement < 1e-6,
               "stationary configuration: displacement " + fmt(max_displacement) + " < 1e-6");
  report.check(min_dw_increment >= -1e-12,
               "d_W(mu(t), Xi) does not decrease (min increment " + fmt(min_dw_increment) +
                   ")");
}

void run_instability(const ScenarioConfig& cfg, const fs::path& dir, RunReport& report) {
  const ParticleMeasure mu1 = discretize_initial(cfg.initial, *cfg.domain);
  const ParticleMeasure mu2 = discretize_initial(*cfg.initial2, *cfg.domain);

  SimState a, b;
  a.measure = mu1;
  b.measure = mu2;
  const long steps = static_cast<long>(std::ceil(cfg.scheme.t_end / cfg.scheme.dt - 0.5));
  const int every = cfg.scheme.record_every > 0 ? cfg.scheme.record_every : 1;

  std::ofstream out(dir / "separation.csv");
  out << std::setprecision(17) << "t,separation\n";
  const double initial_sep = wasserstein2(mu1, mu2).distance;
  out << 0.0 << "," << initial_sep << "\n";
  for (long k = 0; k < steps; ++k) {
    a = catching_up_step(a, cfg.scheme.dt, *cfg.domain, cfg.W, cfg.V);
    b = catching_up_step(b, cfg.scheme.dt, *cfg.domain, cfg.W, cfg.V);
    if (a.step_count % every == 0 || k == steps - 1)
      out << a.time << "," << wasserstein2(a.measure, b.measure).distance << "\n";
  }
  const double final_sep = wasserstein2(a.measure, b.measure).distance;
  report.note("initial separation " + fmt(initial_sep) + ", ambiguous projections " +
              (a.ambiguous_projection || b.ambiguous_projection ? "hit" : "not hit"));
  report.check(final_sep >= 0.5,
               "separation grew to " + fmt(final_sep) + " >= 0.5 by t = " +
                   fmt(cfg.scheme.t_end) + " (Lipschitz stability fails)");
}

void run_evi_check(const ScenarioConfig& cfg, const fs::path& dir, RunReport& report) {
  const ParticleMeasure mu0 = discretize_initial(cfg.initial, *cfg.domain);
  SchemeConfig burn = cfg.scheme;
  burn.t_end = cfg.evi_burn_in;
  const Trajectory traj = simulate(mu0, burn, *cfg.domain, cfg.W, cfg.V, false);
  const ParticleMeasure& mu = traj.final_state.measure;

  SimState state = traj.final_state;
  const SimState next = catching_up_step(state, cfg.evi_h, *cfg.domain, cfg.W, cfg.V);

  const double kappa = evi_kappa(cfg.W, cfg.V, *cfg.domain);
  report.note("kappa_evi = " + fmt(kappa) + ", h = " + fmt(cfg.evi_h));

  Rng rng(cfg.seed + 0x657669ULL);
  std::ofstream out(dir / "evi_residuals.csv");
  out << std::setprecision(17) << "ref,residual\n";
  double max_residual = -kInf;
  for (int k = 0; k < cfg.evi_n_ref; ++k) {
    const ParticleMeasure nu = random_measure_in(*cfg.domain, 8, rng);
    const double res = evi_residual(mu, next.measure, cfg.evi_h, nu, kappa, cfg.W, cfg.V,
                                    state.time);
    out << k << "," << res << "\n";
    max_residual = std::max(max_residual, res);
  }
  report.check(max_residual <= 1e-2, "EVI residual " + fmt(max_residual) +
                                         " <= 1e-2 across " +
                                         std::to_string(cfg.evi_n_ref) +
                                         " reference measures");
}

}  // namespace

RunReport run_scenario(const ScenarioConfig& cfg, const std::string& output_root) {
  RunReport report;
  const fs::path dir = prepare_outdir(cfg, output_root);
  switch (cfg.experiment) {
    case ExperimentKind::Simulate:
      run_simulate(cfg, dir, report);
      break;
    case ExperimentKind::Stability:
      run_stability(cfg, dir, report);
      break;
    case ExperimentKind::Aggregate:
      run_aggregate(cfg, dir, report);
      break;
    case ExperimentKind::Sharpness:
      run_sharpness(cfg, dir, report);
      break;
    case ExperimentKind::Instability:
      run_instability(cfg, dir, report);
      break;
    case ExperimentKind::EviCheck:
      run_evi_check(cfg, dir, report);
      break;
  }
  return report;
}

}  // namespace proxflow
