#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "proxflow/geometry.hpp"
#include "proxflow/rng.hpp"

using namespace proxflow;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("containment on built-in domains") {
  auto ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
  CHECK(ball->contains(Vec{0.0, 0.0}));
  CHECK_FALSE(ball->contains(Vec{2.0, 0.0}));

  // Annulus sector with eps = 0.1: radius/angle check done by hand.
  auto annulus = Domain::annulus_sector(0.9, 1.0, -0.1, kPi + 0.1);
  const Vec p{0.95 * std::cos(kPi / 2.0), 0.95 * std::sin(kPi / 2.0)};
  CHECK(annulus->contains(p));
  CHECK_FALSE(annulus->contains(Vec{0.0, -0.95}));  // angle outside the sector
  CHECK_FALSE(annulus->contains(Vec{0.5, 0.5}));    // radius below r_in
}

TEST_CASE("projection closed forms") {
  auto ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
  const Vec q = ball->project(Vec{2.0, 0.0}).point;
  CHECK(q[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(q[1] == doctest::Approx(0.0).epsilon(1e-14));

  auto half = Domain::half_space(Vec{1.0, 0.0}, 0.0);  // x1 <= 0
  const Vec h = half->project(Vec{3.0, 5.0}).point;
  CHECK(h[0] == doctest::Approx(0.0));
  CHECK(h[1] == doctest::Approx(5.0));

  // Idempotence on the domain.
  CHECK(dist(ball->project(Vec{0.3, -0.4}).point, Vec{0.3, -0.4}) == 0.0);
}

TEST_CASE("disk-with-bite projection matches dense boundary sampling") {
  auto domain = Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5);
  // Points just inside the removed bite, near its arc.
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const double psi = rng.uniform(kPi - 0.5, kPi + 0.5);  // bite arc faces -x from c
    const Vec on_arc = Vec{2.0, 0.0} + 1.5 * Vec{std::cos(psi), std::sin(psi)};
    if (!domain->contains(on_arc)) continue;
    const Vec p = Vec{2.0, 0.0} + (1.5 - rng.uniform(0.01, 0.2)) *
                                      Vec{std::cos(psi), std::sin(psi)};
    if (domain->contains(p)) continue;
    const Vec proj = domain->project(p).point;

    // Oracle: argmin over a dense sampling of both boundary arcs.
    double best = kInf;
    Vec best_q{0.0, 0.0};
    const int K = 400000;
    for (int k = 0; k < K; ++k) {
      const double th = 2.0 * kPi * k / K;
      const Vec rim{std::cos(th), std::sin(th)};
      if (dist(rim, Vec{2.0, 0.0}) >= 1.5 - 1e-12 && dist2(p, rim) < best) {
        best = dist2(p, rim);
        best_q = rim;
      }
      const Vec bite = Vec{2.0, 0.0} + 1.5 * Vec{std::cos(th), std::sin(th)};
      if (norm(bite) <= 1.0 + 1e-12 && dist2(p, bite) < best) {
        best = dist2(p, bite);
        best_q = bite;
      }
    }
    CHECK(dist(proj, best_q) < 2e-4);
    CHECK(dist(p, proj) <= std::sqrt(best) + 1e-9);
    // The claimed closest point for a point inside the bite is on the bite arc.
    CHECK(std::abs(dist(proj, Vec{2.0, 0.0}) - 1.5) < 1e-12);
  }
}

TEST_CASE("normal cones: smooth, interior, corner") {
  auto ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
  const Cone at_rim = ball->normal_cone(Vec{1.0, 0.0});
  REQUIRE(at_rim.generators.size() == 1);
  CHECK(dist(at_rim.generators[0], Vec{1.0, 0.0}) < 1e-14);
  CHECK(ball->normal_cone(Vec{0.0, 0.0}).is_zero());
  CHECK_THROWS_AS((void)ball->normal_cone(Vec{3.0, 0.0}), PointOutsideDomain);

  auto box = Domain::box(Vec{-1.0, -1.0}, Vec{1.0, 1.0});
  const Cone corner = box->normal_cone(Vec{1.0, 1.0});
  REQUIRE(corner.generators.size() == 2);

  // A 3D box corner activates three faces; the outward diagonal is fully
  // normal there.
  auto cube = Domain::box(Vec{-1.0, -1.0, -1.0}, Vec{1.0, 1.0, 1.0});
  const Cone corner3 = cube->normal_cone(Vec{1.0, 1.0, -1.0});
  REQUIRE(corner3.generators.size() == 3);
  CHECK(norm(project_tangent(*cube, Vec{1.0, 1.0, -1.0}, Vec{0.5, 0.5, -0.5})) < 1e-10);

  // Verify against the proximal-normal definition: for unit v in the
  // corner fan and alpha > 0, the projection of x + alpha v is x itself.
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const double a = rng.uniform(), b = rng.uniform();
    if (a + b == 0.0) continue;
    const Vec v = normalized(a * corner.generators[0] + b * corner.generators[1]);
    const double alpha = rng.uniform(0.01, 0.5);
    const Vec back = box->project(Vec{1.0, 1.0} + alpha * v).point;
    CHECK(dist(back, Vec{1.0, 1.0}) < 1e-12);
  }
}

TEST_CASE("moreau decomposition closed forms") {
  {
    const Cone cone{{Vec{1.0, 0.0}}};
    const MoreauSplit s = moreau_decompose(Vec{1.0, 1.0}, cone);
    CHECK(dist(s.normal, Vec{1.0, 0.0}) < 1e-14);
    CHECK(dist(s.tangent, Vec{0.0, 1.0}) < 1e-14);
  }
  {
    const Cone zero;
    const MoreauSplit s = moreau_decompose(Vec{0.3, -0.7}, zero);
    CHECK(norm(s.normal) == 0.0);
    CHECK(dist(s.tangent, Vec{0.3, -0.7}) == 0.0);
  }
  {
    // v in the polar of the quadrant cone: v_N = 0. Brute-force grid over
    // nonnegative combinations confirms the optimum sits at the apex.
    const Cone quadrant{{Vec{1.0, 0.0}, Vec{0.0, 1.0}}};
    const Vec v{-1.0, -1.0};
    const MoreauSplit s = moreau_decompose(v, quadrant);
    CHECK(norm(s.normal) == 0.0);
    CHECK(dist(s.tangent, v) == 0.0);
    double grid_best = kInf;
    for (int a = 0; a <= 40; ++a)
      for (int b = 0; b <= 40; ++b)
        grid_best = std::min(grid_best, dist2(v, Vec{0.05 * a, 0.05 * b}));
    CHECK(grid_best >= norm2(v - s.normal) - 1e-12);
  }
  {
    // Three generators exercise the Dykstra path: the negative orthant is
    // the polar of cone{e1, e2, e3}.
    const Cone octant{{Vec{1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0}, Vec{0.0, 0.0, 1.0}}};
    const MoreauSplit s = moreau_decompose(Vec{-1.0, -2.0, 3.0}, octant);
    CHECK(dist(s.normal, Vec{0.0, 0.0, 3.0}) < 1e-9);
    CHECK(dist(s.tangent, Vec{-1.0, -2.0, 0.0}) < 1e-9);
    CHECK(std::abs(dot(s.tangent, s.normal)) < tol_num);
  }
}

TEST_CASE("tangent projection P_x") {
  auto ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
  // Interior: identity.
  CHECK(dist(project_tangent(*ball, Vec{0.2, 0.1}, Vec{5.0, -3.0}), Vec{5.0, -3.0}) == 0.0);
  // Rim with outward velocity: normal part removed.
  CHECK(dist(project_tangent(*ball, Vec{1.0, 0.0}, Vec{1.0, 1.0}), Vec{0.0, 1.0}) < 1e-14);
  // Inward vectors pass through unchanged.
  CHECK(dist(project_tangent(*ball, Vec{1.0, 0.0}, Vec{-1.0, 0.0}), Vec{-1.0, 0.0}) <
        1e-14);
  // Contraction |P_x(v)| <= |v| on random samples.
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const Vec x = normalized(Vec{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    const Vec v{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    CHECK(norm(project_tangent(*ball, x, v)) <= norm(v) + 1e-12);
  }
}

TEST_CASE("product projection componentwise rule") {
  auto ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
  // n = 1 reduces to the plain projection.
  CHECK(product_projection_check(*ball, {Vec{0.5, 0.0}}, {Vec{1.0, 0.0}}));
  // Interior points with small displacements: identity both ways.
  CHECK(product_projection_check(*ball, {Vec{0.1, 0.1}, Vec{-0.2, 0.0}},
                                 {Vec{0.05, 0.0}, Vec{0.0, 0.05}}));
  // Boundary points pushed outward: componentwise radial projections,
  // cross-checked against a direct argmin over stacked feasible pairs.
  const std::vector<Vec> pts{Vec{1.0, 0.0}, Vec{0.0, 1.0}};
  const std::vector<Vec> disp{Vec{0.3, 0.0}, Vec{0.0, 0.2}};
  CHECK(product_projection_check(*ball, pts, disp));

  const Vec d1 = pts[0] + disp[0];
  const Vec d2 = pts[1] + disp[1];
  const double stacked_cost =
      dist2(d1, ball->project(d1).point) + dist2(d2, ball->project(d2).point);
  Rng rng(17);
  double sampled_best = kInf;
  for (int k = 0; k < 200000; ++k) {
    Vec y1{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    Vec y2{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    if (norm(y1) > 1.0 || norm(y2) > 1.0) continue;
    sampled_best = std::min(sampled_best, dist2(d1, y1) + dist2(d2, y2));
  }
  CHECK(stacked_cost <= sampled_best + 1e-6);
}

TEST_CASE("annulus sector corner carries the stationarity cone") {
  // The two-particle sharpness configuration: the velocity at each corner
  // lies inside that corner's normal cone.
  const double eps = 0.1;
  auto domain = Domain::annulus_sector(1.0 - eps, 1.0, -eps, kPi + eps);
  CHECK(domain->eta() == doctest::Approx((1.0 - eps) * std::cos(eps)).epsilon(1e-12));
  CHECK(domain->diameter() == doctest::Approx(2.0));

  const Vec x1{-(1.0 - eps) * std::cos(eps), -(1.0 - eps) * std::sin(eps)};
  const Vec x2{(1.0 - eps) * std::cos(eps), -(1.0 - eps) * std::sin(eps)};
  REQUIRE(domain->contains(x1));
  REQUIRE(domain->contains(x2));

  const Cone c1 = domain->normal_cone(x1);
  REQUIRE(c1.generators.size() == 2);
  const Vec v1 = -0.5 * (x1 - x2);  // quadratic interaction velocity
  CHECK(norm(moreau_decompose(v1, c1).tangent) < 1e-12);

  const Cone c2 = domain->normal_cone(x2);
  REQUIRE(c2.generators.size() == 2);
  const Vec v2 = -0.5 * (x2 - x1);
  CHECK(norm(moreau_decompose(v2, c2).tangent) < 1e-12);
}

TEST_CASE("pacman sector: inside corner and ambiguous projections") {
  auto pac = Domain::pacman_sector(1.0, kPi / 4.0, 7.0 * kPi / 4.0);
  CHECK(pac->eta() == 0.0);
  CHECK_FALSE(pac->prox_regular());
  CHECK(pac->contains(Vec{0.0, 0.0}));
  CHECK(pac->contains(Vec{0.0, 0.5}));
  CHECK_FALSE(pac->contains(Vec{0.5, 0.0}));  // inside the removed wedge

  // Proximal normal cone at the inside corner is {0}.
  CHECK(pac->normal_cone(Vec{0.0, 0.0}).is_zero());

  // A point on the wedge bisector is equidistant from both edges: the
  // projection must flag ambiguity and tie-break lexicographically.
  const ProjectionResult amb = pac->project(Vec{0.5, 0.0});
  CHECK(amb.ambiguous);
  const double s = 0.5 / std::sqrt(2.0) / std::sqrt(2.0);
  CHECK(dist(amb.point, Vec{s, -s}) < 1e-12);  // lower edge is lex-smaller

  // Slightly off the bisector the projection is unique and on the nearer edge.
  const ProjectionResult up = pac->project(Vec{0.5, 1e-6});
  CHECK_FALSE(up.ambiguous);
  CHECK(up.point[1] > 0.0);
  const ProjectionResult down = pac->project(Vec{0.5, -1e-6});
  CHECK(down.point[1] < 0.0);

  // Outer corner cone stops the drift velocity of the instability demo.
  const Vec corner{std::cos(kPi / 4.0), std::sin(kPi / 4.0)};
  const Cone cc = pac->normal_cone(corner);
  REQUIRE(cc.generators.size() == 2);
  CHECK(norm(moreau_decompose(Vec{2.0, 0.0}, cc).tangent) < 1e-12);
}

TEST_CASE("disk-with-bite ambiguity at the bite center") {
  auto domain = Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5);
  // The bite center is equidistant (= rho) from both corners.
  const ProjectionResult res = domain->project(Vec{2.0, 0.0});
  CHECK(res.ambiguous);
  CHECK(res.point[1] < 0.0);  // lexicographic smallest of the two corners
  CHECK(std::abs(norm(res.point) - 1.0) < 1e-12);
}

TEST_CASE("|P_x(v)|^2 is lower semicontinuous across corners") {
  // Corner cones are larger than the adjacent smooth cones, so the
  // projected norm may only jump DOWN at the corner: f(corner) must not
  // exceed the values at nearby boundary points by more than the O(delta)
  // cone rotation.
  struct Case {
    std::shared_ptr<Domain> domain;
    Vec corner;
  };
  const double eps = 0.1;
  std::vector<Case> cases;
  cases.push_back({Domain::box(Vec{-1.0, -1.0}, Vec{1.0, 1.0}), Vec{1.0, 1.0}});
  cases.push_back({Domain::annulus_sector(0.9, 1.0, -eps, kPi + eps),
                   Vec{0.9 * std::cos(kPi + eps), 0.9 * std::sin(kPi + eps)}});
  {
    auto bite = Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5);
    const Vec corner = bite->project(Vec{2.0, 0.0}).point;  // one of the two corners
    cases.push_back({std::move(bite), corner});
  }

  Rng rng(71);
  const double delta = 1e-4;
  for (const auto& c : cases) {
    REQUIRE(c.domain->contains(c.corner));
    REQUIRE(c.domain->normal_cone(c.corner).generators.size() == 2);
    for (int trial = 0; trial < 200; ++trial) {
      const Vec v{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
      const double f_corner =
          norm2(moreau_decompose(v, c.domain->normal_cone(c.corner)).tangent);
      const Vec dir = rng.unit_vector(2);
      const Vec near = c.domain->project(c.corner + delta * dir).point;
      if (dist(near, c.corner) < 0.1 * delta) continue;  // projected back onto the corner
      const double f_near =
          norm2(moreau_decompose(v, c.domain->normal_cone(near)).tangent);
      CHECK(f_corner <= f_near + 10.0 * delta * (1.0 + norm2(v)) + tol_num);
    }
  }
}

TEST_CASE("tangent directions are first-order feasible (tangential regularity)") {
  // v = P_x(w) lies in the contingent cone: dist(x + t v, Omega) = o(t),
  // with the quadratic boundary-curvature rate on the built-in domains.
  Rng rng(72);
  for (const auto& [name, domain] : [] {
    std::vector<std::pair<std::string, std::shared_ptr<Domain>>> ds;
    ds.emplace_back("ball", Domain::ball(Vec{0.0, 0.0}, 1.0));
    ds.emplace_back("box", Domain::box(Vec{-1.0, -1.0}, Vec{1.0, 1.0}));
    ds.emplace_back("annulus", Domain::annulus_sector(0.9, 1.0, -0.1, kPi + 0.1));
    ds.emplace_back("bite", Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5));
    return ds;
  }()) {
    CAPTURE(name);
    for (int trial = 0; trial < 300; ++trial) {
      // Boundary point via outside projection.
      Vec p{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
      if (domain->contains(p)) continue;
      const Vec x = domain->project(p).point;
      const Vec w{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
      const Vec v = moreau_decompose(w, domain->normal_cone(x)).tangent;
      if (norm(v) < 1e-6) continue;
      const double t = 1e-4;
      const Vec stepped = x + t * v;
      const double defect = dist(stepped, domain->project(stepped).point);
      CHECK(defect <= 1e-3 * t * norm(v));
    }
  }
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS((void)Domain::ball(Vec{0.0, 0.0}, -1.0), ConfigError);
  CHECK_THROWS_AS((void)Domain::box(Vec{1.0, 0.0}, Vec{0.0, 1.0}), ConfigError);
  CHECK_THROWS_AS((void)Domain::annulus_sector(1.0, 0.9, 0.0, 1.0), ConfigError);
  CHECK_THROWS_AS((void)Domain::pacman_sector(1.0, 0.0, 1.0), ConfigError);
  // Bite so large it removes every antipodal rim pair.
  CHECK_THROWS_AS((void)Domain::disk_with_bite(1.0, Vec{0.5, 0.0}, 1.4), ConfigError);
  // Clockwise polygon is not accepted.
  CHECK_THROWS_AS(
      (void)Domain::convex_polygon({Vec{0.0, 0.0}, Vec{0.0, 1.0}, Vec{1.0, 0.0}}),
      ConfigError);
}
