#pragma once

#include <functional>
#include <string>
#include <vector>

#include "proxflow/geometry.hpp"
#include "proxflow/vec.hpp"

namespace proxflow {

enum class PotentialKind { Zero, Quadratic, LinearDrift, PowerAttraction };

// C^1 interaction or external potential with an analytically declared
// geodesic-convexity constant and sup-gradient bound. An optional time
// scale s(t) multiplies the potential; the declared constants are the
// user's responsibility in that case.
class Potential {
 public:
  Potential() = default;

  // name in {quadratic, zero, linear_drift, power_attraction}.
  //   quadratic:            W(x) = |x|^2 / 2
  //   zero:                 W == 0
  //   linear_drift:         V(x) = <a, x>, params = components of a
  //   power_attraction(p):  W(x) = |x|^p / p, params = {p}, p >= 2
  static Potential builtin(const std::string& name, const std::vector<double>& params = {});

  double value(const Vec& x) const;
  double value(double t, const Vec& x) const { return time_scale_at(t) * value(x); }

  Vec grad(const Vec& x) const;
  Vec grad(double t, const Vec& x) const { return time_scale_at(t) * grad(x); }
  // Allocation-free form for the O(n^2) force loop.
  void grad_into(double t, const double* x, int d, double* out) const;

  // Declared lambda such that <grad f(x) - grad f(y), x - y> >= lambda |x-y|^2
  // on the relevant convex set.
  double lambda() const { return lambda_; }
  // Ladder rule: lambda valid on the centered ball of radius r.
  double lambda_on_ball(double r) const;

  // sup |grad f| over the centered ball of radius r.
  double grad_sup_bound(double r) const;

  // Smallest C with |grad f(x)| <= C (1 + |x|) everywhere; +inf if none.
  double linear_growth_constant() const;

  bool is_zero() const { return kind_ == PotentialKind::Zero; }
  PotentialKind kind() const { return kind_; }

  bool time_dependent() const { return static_cast<bool>(time_scale_); }
  void set_time_scale(std::function<double(double)> s) { time_scale_ = std::move(s); }

  // Test hook: forge a potential with an explicitly declared lambda (the
  // built-ins declare theirs analytically).
  static Potential with_lambda(Potential base, double lambda) {
    base.lambda_ = lambda;
    return base;
  }

 private:
  double time_scale_at(double t) const { return time_scale_ ? time_scale_(t) : 1.0; }

  PotentialKind kind_ = PotentialKind::Zero;
  Vec drift_;        // linear_drift direction
  double power_ = 2.0;
  double lambda_ = 0.0;
  std::function<double(double)> time_scale_;
};

// Nested centered balls K_k = B(r_k) with the per-level geodesic
// convexity constants of W (on K_k - K_k) and V (on K_k).
struct ConvexityLadder {
  std::vector<double> radii;
  std::vector<double> lambdas_W;
  std::vector<double> lambdas_V;

  static ConvexityLadder build(const Potential& W, const Potential& V,
                               std::vector<double> radii);

  // Index of the first level covering radius r, extending the ladder by
  // doubling the top radius if needed.
  int level_for(double r, const Potential& W, const Potential& V);
};

// Upper bound for sup_{x,y in Omega} |grad W(x - y)|. Throws
// UnboundedDomain when the domain has infinite diameter.
double grad_sup_on_difference_set(const Potential& W, const Domain& domain);

// Two-measure stability exponent: -min(lambda_W, 0) - lambda_V plus the
// boundary error term (|grad W|_inf + |grad V|_inf) / eta; the eta term
// vanishes on convex domains.
double contraction_exponent(const Potential& W, const Potential& V, const Domain& domain);

// Singleton-distance decay exponent -lambda_W + |grad W|_inf / (2 eta);
// negative iff eta > Diam(Omega) / 2 for the quadratic interaction.
double aggregation_exponent(const Potential& W, const Domain& domain);

}  // namespace proxflow
