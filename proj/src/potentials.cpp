#include "proxflow/potentials.hpp"

#include <algorithm>
#include <cmath>

#include "proxflow/errors.hpp"

namespace proxflow {

Potential Potential::builtin(const std::string& name, const std::vector<double>& params) {
  Potential p;
  if (name == "zero") {
    p.kind_ = PotentialKind::Zero;
    p.lambda_ = 0.0;
  } else if (name == "quadratic") {
    p.kind_ = PotentialKind::Quadratic;
    p.lambda_ = 1.0;
  } else if (name == "linear_drift") {
    if (params.empty())
      throw UnknownPotential("linear_drift: params must give the drift vector");
    p.kind_ = PotentialKind::LinearDrift;
    p.drift_ = Vec(std::vector<double>(params));
    p.lambda_ = 0.0;
  } else if (name == "power_attraction") {
    if (params.size() != 1 || params[0] < 2.0)
      throw UnknownPotential("power_attraction: params must be {p} with p >= 2");
    p.kind_ = PotentialKind::PowerAttraction;
    p.power_ = params[0];
    p.lambda_ = params[0] == 2.0 ? 1.0 : 0.0;  // 0 on sets containing the origin
  } else {
    throw UnknownPotential("unknown potential kind '" + name + "'");
  }
  return p;
}

double Potential::value(const Vec& x) const {
  switch (kind_) {
    case PotentialKind::Zero:
      return 0.0;
    case PotentialKind::Quadratic:
      return 0.5 * norm2(x);
    case PotentialKind::LinearDrift:
      return dot(drift_, x);
    case PotentialKind::PowerAttraction:
      return std::pow(norm(x), power_) / power_;
  }
  return 0.0;
}

Vec Potential::grad(const Vec& x) const {
  Vec out(x.dim());
  const double n2 = norm2(x);
  switch (kind_) {
    case PotentialKind::Zero:
      break;
    case PotentialKind::Quadratic:
      out = x;
      break;
    case PotentialKind::LinearDrift:
      out = drift_;
      break;
    case PotentialKind::PowerAttraction:
      if (n2 > 0.0) out = std::pow(n2, 0.5 * power_ - 1.0) * x;
      break;
  }
  return out;
}

void Potential::grad_into(double t, const double* x, int d, double* out) const {
  const double s = time_scale_at(t);
  switch (kind_) {
    case PotentialKind::Zero:
      for (int i = 0; i < d; ++i) out[i] = 0.0;
      return;
    case PotentialKind::Quadratic:
      for (int i = 0; i < d; ++i) out[i] = s * x[i];
      return;
    case PotentialKind::LinearDrift:
      for (int i = 0; i < d; ++i) out[i] = s * drift_[i];
      return;
    case PotentialKind::PowerAttraction: {
      double n2 = 0.0;
      for (int i = 0; i < d; ++i) n2 += x[i] * x[i];
      const double f = n2 > 0.0 ? s * std::pow(n2, 0.5 * power_ - 1.0) : 0.0;
      for (int i = 0; i < d; ++i) out[i] = f * x[i];
      return;
    }
  }
}

double Potential::lambda_on_ball(double r) const {
  switch (kind_) {
    case PotentialKind::Zero:
    case PotentialKind::LinearDrift:
      return 0.0;
    case PotentialKind::Quadratic:
      return 1.0;
    case PotentialKind::PowerAttraction:
      (void)r;
      return power_ == 2.0 ? 1.0 : 0.0;
  }
  return 0.0;
}

double Potential::grad_sup_bound(double r) const {
  switch (kind_) {
    case PotentialKind::Zero:
      return 0.0;
    case PotentialKind::Quadratic:
      return r;
    case PotentialKind::LinearDrift:
      return norm(drift_);
    case PotentialKind::PowerAttraction:
      return std::pow(r, power_ - 1.0);
  }
  return 0.0;
}

double Potential::linear_growth_constant() const {
  switch (kind_) {
    case PotentialKind::Zero:
      return 0.0;
    case PotentialKind::Quadratic:
      return 1.0;
    case PotentialKind::LinearDrift:
      return norm(drift_);
    case PotentialKind::PowerAttraction:
      return power_ == 2.0 ? 1.0 : kInf;
  }
  return 0.0;
}

ConvexityLadder ConvexityLadder::build(const Potential& W, const Potential& V,
                                       std::vector<double> radii) {
  ConvexityLadder ladder;
  double prev = 0.0;
  for (double r : radii) {
    if (r <= prev) throw ConfigError("convexity ladder radii must be strictly increasing");
    prev = r;
  }
  ladder.radii = std::move(radii);
  for (double r : ladder.radii) {
    ladder.lambdas_W.push_back(W.lambda_on_ball(2.0 * r));  // K_k - K_k = B(2 r_k)
    ladder.lambdas_V.push_back(V.lambda_on_ball(r));
  }
  return ladder;
}

int ConvexityLadder::level_for(double r, const Potential& W, const Potential& V) {
  if (radii.empty()) radii.push_back(std::max(1.0, r));
  while (radii.back() < r) radii.push_back(2.0 * radii.back());
  while (lambdas_W.size() < radii.size()) {
    const double rk = radii[lambdas_W.size()];
    lambdas_W.push_back(W.lambda_on_ball(2.0 * rk));
    lambdas_V.push_back(V.lambda_on_ball(rk));
  }
  for (std::size_t k = 0; k < radii.size(); ++k)
    if (radii[k] >= r) return static_cast<int>(k);
  return static_cast<int>(radii.size()) - 1;
}

double grad_sup_on_difference_set(const Potential& W, const Domain& domain) {
  if (!domain.bounded())
    throw UnboundedDomain("grad_sup_on_difference_set: domain has infinite diameter");
  return W.grad_sup_bound(domain.diameter());
}

double contraction_exponent(const Potential& W, const Potential& V, const Domain& domain) {
  const double lambda_w_minus = std::min(W.lambda(), 0.0);
  const double base = -lambda_w_minus - V.lambda();
  if (domain.eta() == kInf) return base;  // convex: no boundary error term
  const double sup_w = grad_sup_on_difference_set(W, domain);
  const double sup_v = V.grad_sup_bound(domain.circumradius());
  return base + (sup_w + sup_v) / domain.eta();
}

double aggregation_exponent(const Potential& W, const Domain& domain) {
  if (domain.eta() == kInf) return -W.lambda();
  const double sup_w = grad_sup_on_difference_set(W, domain);
  return -W.lambda() + sup_w / (2.0 * domain.eta());
}

}  // namespace proxflow
