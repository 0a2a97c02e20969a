#pragma once

#include <vector>

#include "proxflow/geometry.hpp"
#include "proxflow/measures.hpp"
#include "proxflow/potentials.hpp"

namespace proxflow {

enum class Scheme { CatchingUp, ProjectedEuler };

struct SchemeConfig {
  Scheme scheme = Scheme::CatchingUp;
  double dt = 1e-3;
  double t_end = 1.0;
  int record_every = 1;
};

struct SimState {
  double time = 0.0;
  ParticleMeasure measure;
  long step_count = 0;
  bool ambiguous_projection = false;  // sticky flag (non-prox-regular domains)
};

// dt_max = min(0.1, eta / (2 B)) where B bounds |v_i| through the
// sup-gradient bounds of W (over differences, radius 2 r) and V (radius r).
// Keeps each catching-up substep inside the projection uniqueness region.
// PacManSector has no uniqueness region; returns 0.01 and warns.
double step_size_safety(const Domain& domain, const Potential& W, const Potential& V,
                        double r_support);

// x_i <- proj_Omega(x_i + dt v_i): step by the unprojected velocity, then
// project back onto the constraint set.
SimState catching_up_step(const SimState& state, double dt, const Domain& domain,
                          const Potential& W, const Potential& V);

// x_i <- proj_Omega(x_i + dt P_{x_i}(v_i)): the literal discretization of
// the projected system; the outer projection corrects curvature drift.
SimState projected_euler_step(const SimState& state, double dt, const Domain& domain,
                              const Potential& W, const Potential& V);

struct TrajectoryRecord {
  double t = 0.0;
  double energy = 0.0;
  double dissipation = 0.0;
  double dw_singleton = 0.0;
  double support_radius = 0.0;
  ParticleMeasure measure;  // populated only when snapshots are requested
};

struct Trajectory {
  std::vector<TrajectoryRecord> records;
  SimState final_state;
  bool ambiguous_projection = false;
};

// Fixed-step integration to t_end with records every record_every steps
// (first and final step always recorded). Aborts with InvariantBreach if
// a particle ends a step outside the domain, or if an unbounded-domain
// run escapes the (r0+1)exp(Ct) support envelope.
Trajectory simulate(const ParticleMeasure& initial, const SchemeConfig& cfg,
                    const Domain& domain, const Potential& W, const Potential& V,
                    bool record_measures = false);

// (r0 + 1) exp(C t): a-priori support envelope for compactly supported
// initial data on unbounded domains.
double support_radius_bound(double r0, double C, double t);

// C = 2 C_W + C_V from the linear-growth constants |grad| <= C (1 + |x|);
// +inf when a potential has superlinear gradient growth.
double support_growth_constant(const Potential& W, const Potential& V);

struct StabilityReport {
  double kappa = 0.0;  // contraction exponent used for the envelope
  double dw0 = 0.0;
  struct Point {
    double t;
    double measured;
    double envelope;
  };
  std::vector<Point> series;
  bool violated = false;   // measured / envelope > 1 + 1e-2 somewhere
  double max_ratio = 0.0;
};

// Co-simulates both initial measures and compares d_W(mu1(t), mu2(t))
// against exp(kappa t) d_W(0) at every record point.
StabilityReport stability_experiment(const ParticleMeasure& mu1_0,
                                     const ParticleMeasure& mu2_0,
                                     const SchemeConfig& cfg, const Domain& domain,
                                     const Potential& W, const Potential& V);

}  // namespace proxflow
