#include "proxflow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "proxflow/dynamics.hpp"
#include "proxflow/harness.hpp"
#include "proxflow/measures.hpp"
#include "proxflow/potentials.hpp"
#include "proxflow/rng.hpp"
#include "proxflow/transport.hpp"

namespace proxflow::verify {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Check make_check(const std::string& name, bool ok, double worst) {
  return {name, ok, "worst " + fmt(worst)};
}

}  // namespace

std::vector<std::pair<std::string, std::shared_ptr<Domain>>> builtin_prox_regular_domains() {
  std::vector<std::pair<std::string, std::shared_ptr<Domain>>> out;
  out.emplace_back("half_space", Domain::half_space(Vec{1.0, 0.0}, 0.0));
  out.emplace_back("ball", Domain::ball(Vec{0.0, 0.0}, 1.0));
  out.emplace_back("box", Domain::box(Vec{-1.0, -1.0}, Vec{1.0, 1.0}));
  out.emplace_back("convex_polygon",
                   Domain::convex_polygon({Vec{1.0, 0.0}, Vec{0.3, 1.1}, Vec{-0.9, 0.6},
                                           Vec{-0.9, -0.6}, Vec{0.3, -1.1}}));
  out.emplace_back("annulus_sector", Domain::annulus_sector(0.9, 1.0, -0.1, kPi + 0.1));
  out.emplace_back("disk_with_bite", Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5));
  return out;
}

BoundarySample sample_boundary(const Domain& domain, Rng& rng) {
  const auto [lo, hi] = domain.sampling_box();
  // Inflate the window a little so every boundary feature is reachable
  // from outside.
  Vec ilo = lo, ihi = hi;
  for (int i = 0; i < lo.dim(); ++i) {
    const double pad = 0.25 * (hi[i] - lo[i]);
    ilo[i] -= pad;
    ihi[i] += pad;
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Vec p = rng.uniform_in_box(ilo, ihi);
    if (domain.contains(p)) continue;
    const Vec x = domain.project(p).point;
    const double d = dist(p, x);
    if (d <= 10.0 * tol_geom) continue;
    return {x, (1.0 / d) * (p - x)};
  }
  throw Error("sample_boundary: could not generate an outside sample");
}

Vec sample_inside(const Domain& domain, Rng& rng) {
  const auto [lo, hi] = domain.sampling_box();
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    const Vec p = rng.uniform_in_box(lo, hi);
    if (domain.contains(p)) return p;
  }
  throw Error("sample_inside: rejection sampling failed");
}

// ---------------------------------------------------------------------------
// Geometry: cone identities
// ---------------------------------------------------------------------------

std::vector<Check> geometry_suite(const SuiteOptions& opt) {
  std::vector<Check> checks;
  for (const auto& [name, domain] : builtin_prox_regular_domains()) {
    Rng rng(0xC0DE0001ULL);
    double worst_orth = 0.0, worst_pyth = 0.0, worst_idem = 0.0, worst_convexity = 0.0,
           worst_mono = 0.0;
    const bool convex_domain = domain->eta() == kInf;
    for (int k = 0; k < opt.moreau_samples; ++k) {
      const BoundarySample bs = sample_boundary(*domain, rng);
      const Cone cone = domain->normal_cone(bs.x);
      Vec v(domain->dim());
      for (int i = 0; i < v.dim(); ++i) v[i] = rng.uniform(-2.0, 2.0);

      const MoreauSplit split = moreau_decompose(v, cone);
      worst_orth = std::max(worst_orth, std::abs(dot(split.tangent, split.normal)));
      worst_pyth = std::max(
          worst_pyth,
          std::abs(norm2(v) - norm2(split.tangent) - norm2(split.normal)));
      const Vec recombined = split.tangent + split.normal;
      worst_pyth = std::max(worst_pyth, dist(recombined, v));

      const Vec pv = split.tangent;
      const Vec ppv = moreau_decompose(pv, cone).tangent;
      worst_idem = std::max(worst_idem, dist(pv, ppv));

      Vec v2(domain->dim());
      for (int i = 0; i < v2.dim(); ++i) v2[i] = rng.uniform(-2.0, 2.0);
      const double theta = rng.uniform();
      const Vec mix = (1.0 - theta) * v + theta * v2;
      const double lhs = norm2(moreau_decompose(mix, cone).tangent);
      const double rhs = (1.0 - theta) * norm2(pv) +
                         theta * norm2(moreau_decompose(v2, cone).tangent);
      worst_convexity = std::max(worst_convexity, lhs - rhs);

      if (convex_domain) {
        const Vec y = sample_inside(*domain, rng);
        worst_mono = std::max(worst_mono, dot(pv - v, bs.x - y));
      }
    }
    checks.push_back(make_check(name + ": Moreau orthogonality <= 1e-10",
                                worst_orth <= 1e-10, worst_orth));
    checks.push_back(make_check(name + ": Pythagoras / recombination <= 1e-10",
                                worst_pyth <= 1e-10, worst_pyth));
    checks.push_back(make_check(name + ": tangent projection idempotent <= 1e-10",
                                worst_idem <= 1e-10, worst_idem));
    checks.push_back(make_check(name + ": |P_x(v)|^2 convexity <= 1e-10",
                                worst_convexity <= 1e-10, worst_convexity));
    if (convex_domain)
      checks.push_back(make_check(name + ": convex monotonicity <P(v)-v, y-x> <= tol",
                                  worst_mono <= tol_num, worst_mono));
  }
  return checks;
}

// ---------------------------------------------------------------------------
// Prox-regularity sampling
// ---------------------------------------------------------------------------

namespace {

// Worst slack of <v, y-x> <= |y-x|^2 / (2 eta) over sampled triples.
double prox_inequality_worst(const Domain& domain, double eta, int triples, Rng& rng) {
  double worst = -kInf;
  for (int k = 0; k < triples; ++k) {
    const BoundarySample bs = sample_boundary(domain, rng);
    const Vec y = sample_inside(domain, rng);
    const double lhs = dot(bs.normal, y - bs.x);
    const double rhs = eta == kInf ? 0.0 : dist2(y, bs.x) / (2.0 * eta);
    worst = std::max(worst, lhs - rhs);
  }
  return worst;
}

}  // namespace

std::vector<Check> prox_regularity_suite(const SuiteOptions& opt) {
  std::vector<Check> checks;
  for (const auto& [name, domain] : builtin_prox_regular_domains()) {
    Rng rng(0xC0DE0002ULL);
    const double worst = prox_inequality_worst(*domain, domain->eta(), opt.prox_triples, rng);
    checks.push_back(make_check(name + ": prox inequality with declared eta = " +
                                    fmt(domain->eta()),
                                worst <= tol_num, worst));

    if (domain->eta() < kInf) {
      double worst_ball = 0.0;  // intrusion depth into the excluded ball
      Rng rng2(0xC0DE0003ULL);
      for (int k = 0; k < opt.prox_triples; ++k) {
        const BoundarySample bs = sample_boundary(*domain, rng2);
        const Vec center = bs.x + domain->eta() * bs.normal;
        const Vec y = sample_inside(*domain, rng2);
        worst_ball = std::max(worst_ball, domain->eta() - dist(y, center));
      }
      checks.push_back(make_check(name + ": eta-ball exclusion", worst_ball <= tol_geom,
                                  worst_ball));
    }
  }

  // Negative control: inflating eta on the bitten disk must break the
  // inequality on concave-arc triples.
  {
    auto bad = Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5);
    bad->override_eta(15.0);
    Rng rng(0xC0DE0004ULL);
    const double worst = prox_inequality_worst(*bad, bad->eta(), opt.prox_triples, rng);
    checks.push_back(make_check("disk_with_bite: corrupted eta (10x) is rejected",
                                worst > tol_num, worst));
  }
  return checks;
}

// ---------------------------------------------------------------------------
// Transport: oracles and metric axioms
// ---------------------------------------------------------------------------

namespace {

ParticleMeasure random_equal_mass(int n, Rng& rng) {
  ParticleMeasure mu;
  for (int i = 0; i < n; ++i) {
    mu.positions.push_back(Vec{rng.uniform(), rng.uniform()});
    mu.masses.push_back(1.0 / n);
  }
  return mu;
}

double permutation_oracle(const ParticleMeasure& mu, const ParticleMeasure& nu) {
  const int n = mu.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = kInf;
  do {
    double cost = 0.0;
    for (int i = 0; i < n; ++i) cost += dist2(mu.positions[i], nu.positions[perm[i]]);
    best = std::min(best, cost / n);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::sqrt(best);
}

double marginal_error(const TransportPlan& plan, const ParticleMeasure& mu,
                      const ParticleMeasure& nu) {
  std::vector<double> row(mu.size(), 0.0), col(nu.size(), 0.0);
  for (const auto& e : plan.entries) {
    row[e.i] += e.mass;
    col[e.j] += e.mass;
  }
  double worst = 0.0;
  for (int i = 0; i < mu.size(); ++i) worst = std::max(worst, std::abs(row[i] - mu.masses[i]));
  for (int j = 0; j < nu.size(); ++j) worst = std::max(worst, std::abs(col[j] - nu.masses[j]));
  return worst;
}

// Random positive integer composition of q into n parts.
std::vector<int> random_composition(int q, int n, Rng& rng) {
  std::vector<int> parts(n, 1);
  for (int extra = 0; extra < q - n; ++extra) parts[rng.uniform_int(0, n - 1)] += 1;
  return parts;
}

}  // namespace

std::vector<Check> transport_suite(const SuiteOptions& opt) {
  std::vector<Check> checks;

  {
    Rng rng(0xC0DE0010ULL);
    double worst = 0.0, worst_marginal = 0.0, worst_basic = 0.0;
    for (int k = 0; k < opt.ot_instances; ++k) {
      const int n = rng.uniform_int(1, opt.ot_max_n);
      const ParticleMeasure mu = random_equal_mass(n, rng);
      const ParticleMeasure nu = random_equal_mass(n, rng);
      const OTResult res = wasserstein2(mu, nu);
      worst = std::max(worst, std::abs(res.distance - permutation_oracle(mu, nu)));
      worst_marginal = std::max(worst_marginal, marginal_error(res.plan, mu, nu));
      worst_basic = std::max(
          worst_basic,
          static_cast<double>(static_cast<int>(res.plan.entries.size()) - (2 * n - 1)));
    }
    checks.push_back(make_check("OT equals permutation oracle (equal masses, n <= " +
                                    std::to_string(opt.ot_max_n) + ") <= 1e-10",
                                worst <= 1e-10, worst));
    checks.push_back(
        make_check("OT plan marginals <= 1e-9", worst_marginal <= 1e-9, worst_marginal));
    checks.push_back(make_check("OT plan has <= n + m - 1 positive entries",
                                worst_basic <= 0.0, worst_basic));
  }

  {
    Rng rng(0xC0DE0011ULL);
    double worst = 0.0, worst_oracle = 0.0;
    for (int k = 0; k < opt.shard_instances; ++k) {
      const int q = rng.uniform_int(2, 12);
      const int n = rng.uniform_int(1, std::min(4, q));
      const int m = rng.uniform_int(1, std::min(4, q));
      ParticleMeasure mu, nu, mu_shard, nu_shard;
      for (int parts : random_composition(q, n, rng)) {
        Vec p{rng.uniform(), rng.uniform()};
        mu.positions.push_back(p);
        mu.masses.push_back(static_cast<double>(parts) / q);
        for (int s = 0; s < parts; ++s) {
          mu_shard.positions.push_back(p);
          mu_shard.masses.push_back(1.0 / q);
        }
      }
      for (int parts : random_composition(q, m, rng)) {
        Vec p{rng.uniform(), rng.uniform()};
        nu.positions.push_back(p);
        nu.masses.push_back(static_cast<double>(parts) / q);
        for (int s = 0; s < parts; ++s) {
          nu_shard.positions.push_back(p);
          nu_shard.masses.push_back(1.0 / q);
        }
      }
      const double d_direct = wasserstein2(mu, nu).distance;
      const double d_shard = wasserstein2(mu_shard, nu_shard).distance;
      worst = std::max(worst, std::abs(d_direct - d_shard));
      if (q <= 7)
        worst_oracle = std::max(
            worst_oracle, std::abs(d_direct - permutation_oracle(mu_shard, nu_shard)));
    }
    checks.push_back(make_check("shard-reduction oracle for rational masses (q <= 12) "
                                "<= 1e-10",
                                worst <= 1e-10, worst));
    checks.push_back(make_check("sharded permutation oracle (q <= 7) <= 1e-10",
                                worst_oracle <= 1e-10, worst_oracle));
  }

  {
    Rng rng(0xC0DE0012ULL);
    double worst_sym = 0.0, worst_tri = 0.0, worst_id = 0.0;
    const int rounds = opt.quick ? 20 : 60;
    for (int k = 0; k < rounds; ++k) {
      const ParticleMeasure a = random_equal_mass(rng.uniform_int(1, 6), rng);
      const ParticleMeasure b = random_equal_mass(rng.uniform_int(1, 6), rng);
      const ParticleMeasure c = random_equal_mass(rng.uniform_int(1, 6), rng);
      const double dab = wasserstein2(a, b).distance;
      const double dba = wasserstein2(b, a).distance;
      const double dbc = wasserstein2(b, c).distance;
      const double dac = wasserstein2(a, c).distance;
      worst_sym = std::max(worst_sym, std::abs(dab - dba));
      worst_tri = std::max(worst_tri, dac - (dab + dbc));
      worst_id = std::max(worst_id, wasserstein2(a, a).distance);
    }
    checks.push_back(make_check("metric symmetry <= 1e-9", worst_sym <= 1e-9, worst_sym));
    checks.push_back(
        make_check("triangle inequality <= 1e-9", worst_tri <= 1e-9, worst_tri));
    checks.push_back(
        make_check("identity of indiscernibles <= 1e-10", worst_id <= 1e-10, worst_id));
  }

  {
    // distance_to_singletons equals the grid + local refinement minimum of
    // p -> d_W(mu, delta_p).
    Rng rng(0xC0DE0013ULL);
    double worst = 0.0;
    const int rounds = opt.quick ? 4 : 10;
    for (int k = 0; k < rounds; ++k) {
      const ParticleMeasure mu = random_equal_mass(rng.uniform_int(2, 6), rng);
      const SingletonProjection sp = distance_to_singletons(mu);
      auto dw_to_delta = [&](const Vec& p) {
        ParticleMeasure delta;
        delta.positions.push_back(p);
        delta.masses.push_back(1.0);
        return wasserstein2(mu, delta).distance;
      };
      Vec best{0.5, 0.5};
      double best_d = kInf;
      double half = 0.5;
      Vec center{0.5, 0.5};
      for (int round = 0; round < 24; ++round) {
        for (int a = -2; a <= 2; ++a)
          for (int b = -2; b <= 2; ++b) {
            const Vec p{center[0] + half * a / 2.0, center[1] + half * b / 2.0};
            const double d = dw_to_delta(p);
            if (d < best_d) {
              best_d = d;
              best = p;
            }
          }
        center = best;
        half *= 0.5;
      }
      worst = std::max(worst, std::abs(best_d - sp.distance));
      worst = std::max(worst, dw_to_delta(sp.center) - best_d);
    }
    checks.push_back(make_check("distance_to_singletons equals grid-refined min over "
                                "Dirac centers <= 1e-6",
                                worst <= 1e-6, worst));
  }

  return checks;
}

// ---------------------------------------------------------------------------
// Dynamics: identities and refinement behavior
// ---------------------------------------------------------------------------

namespace {

ParticleMeasure seeded_measure(const Domain& domain, int n, std::uint64_t seed) {
  InitialSpec spec;
  spec.recipe = InitialSpec::Recipe::Random;
  spec.n = n;
  spec.seed = seed;
  return discretize_initial(spec, domain);
}

double trapezoid_dissipation(const Trajectory& traj) {
  double total = 0.0;
  for (std::size_t k = 1; k < traj.records.size(); ++k)
    total += 0.5 * (traj.records[k].dissipation + traj.records[k - 1].dissipation) *
             (traj.records[k].t - traj.records[k - 1].t);
  return total;
}

double dissipation_identity_residual(const Domain& domain, const Potential& W,
                                     const Potential& V, const ParticleMeasure& mu0,
                                     double dt, double t_end) {
  SchemeConfig cfg;
  cfg.dt = dt;
  cfg.t_end = t_end;
  cfg.record_every = 1;
  const Trajectory traj = simulate(mu0, cfg, domain, W, V, false);
  const double delta_e = traj.records.front().energy - traj.records.back().energy;
  return std::abs(delta_e - trapezoid_dissipation(traj));
}

}  // namespace

std::vector<Check> dynamics_suite(const SuiteOptions& opt) {
  std::vector<Check> checks;
  const Potential quad = Potential::builtin("quadratic");
  const Potential zero = Potential::builtin("zero");

  {
    // Energy dissipation identity sharpens by >= 1.5x per dt halving.
    auto domain = Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5);
    const int n = opt.quick ? 20 : 40;
    const ParticleMeasure mu0 = seeded_measure(*domain, n, 11);
    const double t_end = opt.quick ? 1.0 : 2.0;
    const double r1 = dissipation_identity_residual(*domain, quad, zero, mu0, 2e-3, t_end);
    const double r2 = dissipation_identity_residual(*domain, quad, zero, mu0, 1e-3, t_end);
    checks.push_back(make_check("energy identity residual shrinks >= 1.5x per dt halving",
                                r1 >= 1.5 * r2 || r1 <= 1e-12, r2 > 0.0 ? r1 / r2 : 0.0));
  }

  {
    // Same identity with persistent boundary contact: an outward drift
    // piles the crowd up against the rim, so the projection is active and
    // the dissipation jumps when particles land on the boundary. The jump
    // phase makes single-run ratios noisy; average over seeds.
    auto disk = Domain::ball(Vec{0.0, 0.0}, 1.0);
    const Potential drift = Potential::builtin("linear_drift", {-2.0, 0.0});
    double r1 = 0.0, r2 = 0.0;
    for (std::uint64_t seed = 14; seed < 18; ++seed) {
      const ParticleMeasure mu0 = seeded_measure(*disk, opt.quick ? 15 : 30, seed);
      r1 += dissipation_identity_residual(*disk, quad, drift, mu0, 2e-3, 2.0);
      r2 += dissipation_identity_residual(*disk, quad, drift, mu0, 1e-3, 2.0);
    }
    checks.push_back(make_check("energy identity holds with active boundary contact",
                                r1 >= 1.4 * r2 || r1 <= 1e-12, r2 > 0.0 ? r1 / r2 : 0.0));
  }

  {
    // Catching-up vs projected Euler: final d_W gap is O(dt).
    auto domain = Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5);
    const ParticleMeasure mu0 = seeded_measure(*domain, 12, 12);
    auto gap_at = [&](double dt) {
      SchemeConfig cfg;
      cfg.dt = dt;
      cfg.t_end = 1.0;
      cfg.record_every = 1 << 20;
      cfg.scheme = Scheme::CatchingUp;
      const Trajectory a = simulate(mu0, cfg, *domain, quad, zero, false);
      cfg.scheme = Scheme::ProjectedEuler;
      const Trajectory b = simulate(mu0, cfg, *domain, quad, zero, false);
      return wasserstein2(a.final_state.measure, b.final_state.measure).distance;
    };
    const double g1 = gap_at(0.02);
    const double g2 = gap_at(0.01);
    const bool ok = g1 <= 1e-10 || g2 <= 0.5 * 1.25 * g1;
    checks.push_back(make_check("scheme consistency: halving dt halves the gap (25% slack)",
                                ok, g1 > 0.0 ? g2 / g1 : 0.0));
  }

  {
    // Cauchy refinement: d_W(final at dt, final at dt/2) decreases.
    auto domain = Domain::ball(Vec{0.0, 0.0}, 1.0);
    const ParticleMeasure mu0 = seeded_measure(*domain, 10, 13);
    auto final_at = [&](double dt) {
      SchemeConfig cfg;
      cfg.dt = dt;
      cfg.t_end = 1.0;
      cfg.record_every = 1 << 20;
      return simulate(mu0, cfg, *domain, quad, quad, false).final_state.measure;
    };
    double prev_gap = kInf;
    bool monotone = true;
    double dt = 0.04;
    ParticleMeasure coarse = final_at(dt);
    for (int halving = 0; halving < 3; ++halving) {
      const ParticleMeasure fine = final_at(dt / 2.0);
      const double gap = wasserstein2(coarse, fine).distance;
      if (prev_gap < kInf && gap > prev_gap && prev_gap > 1e-12) monotone = false;
      prev_gap = gap;
      coarse = fine;
      dt /= 2.0;
    }
    checks.push_back(make_check("Cauchy refinement: successive halvings shrink d_W",
                                monotone, prev_gap));
  }

  {
    // Particle-count stability: n vs 2n quantizations stay within the
    // contraction envelope.
    auto domain = Domain::ball(Vec{0.0, 0.0}, 1.0);
    const int n = opt.quick ? 16 : 50;
    const ParticleMeasure a = seeded_measure(*domain, n, 21);
    const ParticleMeasure b = seeded_measure(*domain, 2 * n, 21);
    SchemeConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = opt.quick ? 1.0 : 3.0;
    cfg.record_every = 200;
    const StabilityReport rep = stability_experiment(a, b, cfg, *domain, quad, zero);
    checks.push_back(make_check("particle-count stability within exp(kappa t) envelope",
                                !rep.violated, rep.max_ratio));
  }

  {
    // Singleton decay under V == 0, lambda_W > 0.
    auto domain = Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5);
    const ParticleMeasure mu0 = seeded_measure(*domain, opt.quick ? 15 : 40, 22);
    SchemeConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = opt.quick ? 1.0 : 3.0;
    cfg.record_every = 100;
    const Trajectory traj = simulate(mu0, cfg, *domain, quad, zero, false);
    const double kappa = aggregation_exponent(quad, *domain);
    const double dw0 = traj.records.front().dw_singleton;
    double max_ratio = 0.0;
    for (const auto& r : traj.records) {
      const double envelope = dw0 * std::exp(kappa * r.t);
      if (envelope > 1e-15) max_ratio = std::max(max_ratio, r.dw_singleton / envelope);
    }
    checks.push_back(make_check("singleton decay within exp(C(Omega) t) envelope",
                                max_ratio <= 1.0 + 1e-2, max_ratio));
  }

  {
    // Support growth on a half space stays under (r0+1) exp(Ct).
    auto domain = Domain::half_space(Vec{1.0, 0.0}, 0.0);
    InitialSpec spec;
    spec.recipe = InitialSpec::Recipe::Random;
    spec.n = opt.quick ? 15 : 40;
    spec.seed = 23;
    // Compact support: intersect the half space with the unit ball by
    // rejection against both.
    auto ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
    Rng rng(spec.seed);
    ParticleMeasure mu0;
    while (mu0.size() < spec.n) {
      const Vec p = rng.uniform_in_box(Vec{-1.0, -1.0}, Vec{1.0, 1.0});
      if (domain->contains(p) && ball->contains(p)) {
        mu0.positions.push_back(p);
        mu0.masses.push_back(0.0);
      }
    }
    for (double& m : mu0.masses) m = 1.0 / mu0.size();
    SchemeConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 1.0;
    cfg.record_every = 100;
    const Trajectory traj = simulate(mu0, cfg, *domain, quad, quad, false);
    const double c = support_growth_constant(quad, quad);
    const double r0 = mu0.support_radius();
    double worst = -kInf;
    for (const auto& r : traj.records)
      worst = std::max(worst, r.support_radius - support_radius_bound(r0, c, r.t));
    checks.push_back(make_check("support radius within (r0+1)exp(Ct) on the half space",
                                worst <= tol_num, worst));
  }

  return checks;
}

}  // namespace proxflow::verify

// ---------------------------------------------------------------------------
// verify_all: harness entry point over the suites
// ---------------------------------------------------------------------------

namespace proxflow {

RunReport verify_all(bool quick) {
  using namespace verify;
  const SuiteOptions opt = quick ? SuiteOptions::quick_options() : SuiteOptions{};
  RunReport report;
  for (const auto& suite :
       {geometry_suite(opt), prox_regularity_suite(opt), transport_suite(opt),
        dynamics_suite(opt)}) {
    for (const auto& c : suite) report.check(c.passed, c.name + " (" + c.detail + ")");
  }
  return report;
}

}  // namespace proxflow
