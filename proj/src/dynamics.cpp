#include "proxflow/dynamics.hpp"

#include <cmath>
#include <iostream>

#include "proxflow/errors.hpp"
#include "proxflow/transport.hpp"

namespace proxflow {

double step_size_safety(const Domain& domain, const Potential& W, const Potential& V,
                        double r_support) {
  if (!domain.prox_regular()) {
    std::cerr << "[proxflow] warning: " << domain.kind_name()
              << " is not prox-regular; fixed dt = 0.01, projections may be "
                 "ambiguous\n";
    return 0.01;
  }
  const double cap = 0.1;
  if (domain.eta() == kInf) return cap;
  const double bound =
      W.grad_sup_bound(2.0 * r_support) + V.grad_sup_bound(r_support);
  if (bound <= 0.0) return cap;
  return std::min(cap, domain.eta() / (2.0 * bound));
}

namespace {

SimState advance(const SimState& state, double dt, const Domain& domain,
                 const Potential& W, const Potential& V, bool project_velocity) {
  SimState next;
  next.time = state.time + dt;
  next.step_count = state.step_count + 1;
  next.ambiguous_projection = state.ambiguous_projection;
  next.measure.masses = state.measure.masses;

  std::vector<Vec> v;
  velocity_field_into(state.measure, W, V, state.time, v);

  const int n = state.measure.size();
  next.measure.positions.resize(n);
  for (int i = 0; i < n; ++i) {
    const Vec& x = state.measure.positions[i];
    const Vec step = project_velocity ? project_tangent(domain, x, v[i]) : v[i];
    const ProjectionResult proj = domain.project(x + dt * step);
    if (proj.ambiguous) next.ambiguous_projection = true;
    next.measure.positions[i] = proj.point;
  }
  return next;
}

}  // namespace

SimState catching_up_step(const SimState& state, double dt, const Domain& domain,
                          const Potential& W, const Potential& V) {
  return advance(state, dt, domain, W, V, /*project_velocity=*/false);
}

SimState projected_euler_step(const SimState& state, double dt, const Domain& domain,
                              const Potential& W, const Potential& V) {
  return advance(state, dt, domain, W, V, /*project_velocity=*/true);
}

double support_radius_bound(double r0, double C, double t) {
  return (r0 + 1.0) * std::exp(C * t);
}

double support_growth_constant(const Potential& W, const Potential& V) {
  return 2.0 * W.linear_growth_constant() + V.linear_growth_constant();
}

namespace {

TrajectoryRecord make_record(const SimState& state, const Domain& domain,
                             const Potential& W, const Potential& V,
                             bool record_measures) {
  TrajectoryRecord rec;
  rec.t = state.time;
  rec.energy = energy(state.measure, W, V, state.time);
  rec.dissipation = dissipation(state.measure, domain, W, V, state.time);
  rec.dw_singleton = distance_to_singletons(state.measure).distance;
  rec.support_radius = state.measure.support_radius();
  if (record_measures) rec.measure = state.measure;
  return rec;
}

void check_feasible(const SimState& state, const Domain& domain) {
  for (const auto& x : state.measure.positions)
    if (!domain.contains(x))
      throw InvariantBreach("simulate: particle left the domain after projection "
                            "(scheme bug)");
}

}  // namespace

Trajectory simulate(const ParticleMeasure& initial, const SchemeConfig& cfg,
                    const Domain& domain, const Potential& W, const Potential& V,
                    bool record_measures) {
  initial.validate(&domain);
  if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0))
    throw ConfigError("simulate: dt and t_end must be positive");
  const int every = cfg.record_every > 0 ? cfg.record_every : 1;

  const bool unbounded = !domain.bounded();
  const double r0 = initial.support_radius();
  const double growth_c = unbounded ? support_growth_constant(W, V) : 0.0;
  if (unbounded && growth_c == kInf)
    throw UnboundedDomain("simulate: potentials lack linear gradient growth on an "
                          "unbounded domain");

  SimState state;
  state.measure = initial;

  Trajectory traj;
  traj.records.push_back(make_record(state, domain, W, V, record_measures));

  const long steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 0.5));
  for (long k = 0; k < steps; ++k) {
    state = cfg.scheme == Scheme::CatchingUp
                ? catching_up_step(state, cfg.dt, domain, W, V)
                : projected_euler_step(state, cfg.dt, domain, W, V);
    check_feasible(state, domain);
    if (unbounded) {
      const double envelope = support_radius_bound(r0, growth_c, state.time);
      if (state.measure.support_radius() > envelope + tol_num)
        throw InvariantBreach("simulate: support radius escaped the exponential "
                              "envelope on an unbounded domain");
    }
    if (state.step_count % every == 0 || k == steps - 1)
      traj.records.push_back(make_record(state, domain, W, V, record_measures));
  }
  traj.final_state = std::move(state);
  traj.ambiguous_projection = traj.final_state.ambiguous_projection;
  return traj;
}

StabilityReport stability_experiment(const ParticleMeasure& mu1_0,
                                     const ParticleMeasure& mu2_0,
                                     const SchemeConfig& cfg, const Domain& domain,
                                     const Potential& W, const Potential& V) {
  mu1_0.validate(&domain);
  mu2_0.validate(&domain);

  StabilityReport report;
  report.kappa = contraction_exponent(W, V, domain);
  report.dw0 = wasserstein2(mu1_0, mu2_0).distance;

  SimState a, b;
  a.measure = mu1_0;
  b.measure = mu2_0;

  const int every = cfg.record_every > 0 ? cfg.record_every : 1;
  const long steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 0.5));

  auto record = [&](double t) {
    const double measured = wasserstein2(a.measure, b.measure).distance;
    const double envelope = std::exp(report.kappa * t) * report.dw0;
    report.series.push_back({t, measured, envelope});
    if (envelope > 1e-15) {
      const double ratio = measured / envelope;
      report.max_ratio = std::max(report.max_ratio, ratio);
      if (ratio > 1.0 + 1e-2) report.violated = true;
    } else if (measured > 1e-12) {
      report.violated = true;
      report.max_ratio = kInf;
    }
  };

  record(0.0);
  for (long k = 0; k < steps; ++k) {
    if (cfg.scheme == Scheme::CatchingUp) {
      a = catching_up_step(a, cfg.dt, domain, W, V);
      b = catching_up_step(b, cfg.dt, domain, W, V);
    } else {
      a = projected_euler_step(a, cfg.dt, domain, W, V);
      b = projected_euler_step(b, cfg.dt, domain, W, V);
    }
    if (a.step_count % every == 0 || k == steps - 1) record(a.time);
  }
  return report;
}

}  // namespace proxflow
