#pragma once

#include <utility>
#include <vector>

#include "proxflow/geometry.hpp"
#include "proxflow/measures.hpp"
#include "proxflow/potentials.hpp"

namespace proxflow {

// Sparse coupling between two particle measures. Entries are the
// positive-flow cells of a vertex of the transportation polytope, so
// there are at most source_n + target_n - 1 of them.
struct TransportPlan {
  struct Entry {
    int i, j;
    double mass;
  };
  std::vector<Entry> entries;
  int source_n = 0;
  int target_n = 0;

  double row_marginal(int i) const;
  double col_marginal(int j) const;
};

struct OTResult {
  double distance = 0.0;  // 2-Wasserstein distance
  TransportPlan plan;
};

// Exact discrete W2 via the transportation simplex (north-west corner
// start, Bland's rule anti-cycling). The returned plan passes a dual
// feasibility / complementary slackness certificate at 1e-8 relative;
// SolverStall is thrown if the solve terminates without one.
OTResult wasserstein2(const ParticleMeasure& mu, const ParticleMeasure& nu);

struct SingletonProjection {
  double distance = 0.0;
  Vec center;  // center of mass; may lie outside a nonconvex domain
};

// d_W(mu, Xi): distance to the set of Dirac masses, attained at the
// center of mass.
SingletonProjection distance_to_singletons(const ParticleMeasure& mu);

// Coefficient of the evolution variational inequality:
// lambda_W^- / 2 + lambda_V / 2 - (|grad W|_inf + |grad V|_inf) / (2 eta),
// with the eta term dropped on convex domains.
double evi_kappa(const Potential& W, const Potential& V, const Domain& domain);

// Forward-difference EVI residual
//   [d_W^2(mu_next, nu) - d_W^2(mu_t, nu)] / (2 h)
//   + kappa_evi d_W^2(mu_t, nu) - (E(nu) - E(mu_t));
// nonpositive up to O(h) along trajectories of the flow.
double evi_residual(const ParticleMeasure& mu_t, const ParticleMeasure& mu_next,
                    double h, const ParticleMeasure& nu, double kappa_evi,
                    const Potential& W, const Potential& V, double t = 0.0);

// Least-squares slope of log(value) against t. Throws NonPositiveValue
// on nonpositive values.
double fit_decay_rate(const std::vector<std::pair<double, double>>& series);

}  // namespace proxflow
