#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "proxflow/potentials.hpp"
#include "proxflow/rng.hpp"

using namespace proxflow;

TEST_CASE("built-in potentials: values and gradients") {
  const Potential quad = Potential::builtin("quadratic");
  CHECK(quad.value(Vec{3.0, 4.0}) == doctest::Approx(12.5));
  CHECK(dist(quad.grad(Vec{3.0, 4.0}), Vec{3.0, 4.0}) == 0.0);
  CHECK(quad.lambda() == 1.0);

  const Potential drift = Potential::builtin("linear_drift", {-2.0, 0.0});
  CHECK(dist(drift.grad(Vec{0.7, -0.3}), Vec{-2.0, 0.0}) == 0.0);
  CHECK(drift.value(Vec{1.0, 5.0}) == doctest::Approx(-2.0));
  CHECK(drift.lambda() == 0.0);

  const Potential zero = Potential::builtin("zero");
  CHECK(zero.value(Vec{9.0, 9.0}) == 0.0);
  CHECK(norm(zero.grad(Vec{9.0, 9.0})) == 0.0);

  const Potential quartic = Potential::builtin("power_attraction", {4.0});
  CHECK(quartic.value(Vec{2.0, 0.0}) == doctest::Approx(4.0));
  CHECK(dist(quartic.grad(Vec{2.0, 0.0}), Vec{8.0, 0.0}) < 1e-12);
  CHECK(quartic.lambda() == 0.0);
  CHECK(norm(quartic.grad(Vec{0.0, 0.0})) == 0.0);

  CHECK_THROWS_AS((void)Potential::builtin("morse"), UnknownPotential);
  CHECK_THROWS_AS((void)Potential::builtin("power_attraction", {1.5}), UnknownPotential);
}

TEST_CASE("gradients match central finite differences") {
  Rng rng(5);
  const double h = 1e-5;
  for (const Potential& f :
       {Potential::builtin("quadratic"), Potential::builtin("linear_drift", {0.4, -1.1}),
        Potential::builtin("power_attraction", {3.0})}) {
    for (int trial = 0; trial < 50; ++trial) {
      Vec x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
      const Vec g = f.grad(x);
      for (int k = 0; k < 2; ++k) {
        Vec xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        const double fd = (f.value(xp) - f.value(xm)) / (2.0 * h);
        CHECK(std::abs(fd - g[k]) <= 1e-6);
      }
    }
  }
}

TEST_CASE("declared lambda passes the monotonicity sampler") {
  Rng rng(6);
  for (const Potential& f :
       {Potential::builtin("quadratic"), Potential::builtin("zero"),
        Potential::builtin("linear_drift", {1.0, 2.0}),
        Potential::builtin("power_attraction", {4.0})}) {
    for (int trial = 0; trial < 500; ++trial) {
      const Vec x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
      const Vec y{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
      const double lhs = dot(f.grad(x) - f.grad(y), x - y);
      CHECK(lhs >= f.lambda() * dist2(x, y) - 1e-10);
    }
  }
}

TEST_CASE("sup-gradient bound over difference sets") {
  const Potential quad = Potential::builtin("quadratic");
  auto ball = Domain::ball(Vec{0.0, 0.0}, 1.0);
  CHECK(grad_sup_on_difference_set(quad, *ball) == doctest::Approx(2.0));

  auto box = Domain::box(Vec{-1.0, -1.0}, Vec{1.0, 1.0});
  CHECK(grad_sup_on_difference_set(quad, *box) ==
        doctest::Approx(2.0 * std::sqrt(2.0)));

  CHECK(grad_sup_on_difference_set(Potential::builtin("zero"), *ball) == 0.0);

  auto half = Domain::half_space(Vec{1.0, 0.0}, 0.0);
  CHECK_THROWS_AS((void)grad_sup_on_difference_set(quad, *half), UnboundedDomain);
}

TEST_CASE("contraction exponent") {
  auto disk = Domain::ball(Vec{0.0, 0.0}, 1.0);
  const Potential quad = Potential::builtin("quadratic");
  const Potential half_convex =
      Potential::with_lambda(Potential::builtin("quadratic"), 0.5);
  // Convex domain: kappa = -(lambda_W^- + lambda_V) with lambda_W^- = 0.
  CHECK(contraction_exponent(quad, half_convex, *disk) == doctest::Approx(-0.5));

  const Potential zero = Potential::builtin("zero");
  auto bite = Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5);
  CHECK(contraction_exponent(zero, zero, *bite) == doctest::Approx(0.0));

  // Bounded nonconvex domain: the eta error term enters with 1/eta.
  CHECK(contraction_exponent(quad, zero, *bite) == doctest::Approx(2.0 / 1.5));

  // The single-measure (aggregation) form uses -lambda_W, not its negative
  // part: -1 + 2/1.5 assembled from the same ingredients.
  const double prop_110_form =
      -quad.lambda() + grad_sup_on_difference_set(quad, *bite) / bite->eta();
  CHECK(prop_110_form == doctest::Approx(-1.0 + 2.0 / 1.5));

  // Monotone decreasing in eta.
  auto bite_larger_eta = Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5);
  bite_larger_eta->override_eta(2.0);
  CHECK(contraction_exponent(quad, zero, *bite_larger_eta) <
        contraction_exponent(quad, zero, *bite));
}

TEST_CASE("aggregation exponent and the Diam/2 criterion") {
  const Potential quad = Potential::builtin("quadratic");

  auto bite = Domain::disk_with_bite(1.0, Vec{2.0, 0.0}, 1.5);
  CHECK(bite->eta() == doctest::Approx(1.5));
  CHECK(bite->diameter() == doctest::Approx(2.0));
  CHECK(aggregation_exponent(quad, *bite) == doctest::Approx(-1.0 / 3.0));

  auto disk = Domain::ball(Vec{0.0, 0.0}, 1.0);
  CHECK(aggregation_exponent(quad, *disk) == doctest::Approx(-1.0));

  // eta = Diam/2 exactly: no decay guaranteed.
  auto marginal = Domain::disk_with_bite(1.0, Vec{1.8, 0.0}, 1.0);
  CHECK(aggregation_exponent(quad, *marginal) == doctest::Approx(0.0));

  // Criterion: negative iff eta > Diam/2.
  CHECK((aggregation_exponent(quad, *bite) < 0.0) == (bite->eta() > bite->diameter() / 2.0));
  CHECK((aggregation_exponent(quad, *marginal) < 0.0) ==
        (marginal->eta() > marginal->diameter() / 2.0));
}

TEST_CASE("convexity ladder") {
  const Potential quad = Potential::builtin("quadratic");
  const Potential quartic = Potential::builtin("power_attraction", {4.0});

  ConvexityLadder ladder = ConvexityLadder::build(quartic, quad, {1.0, 2.0, 4.0});
  CHECK(ladder.lambdas_W == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(ladder.lambdas_V == std::vector<double>{1.0, 1.0, 1.0});

  CHECK_THROWS_AS((void)ConvexityLadder::build(quad, quad, {1.0, 1.0}), ConfigError);

  // level_for extends by doubling and covers any requested radius.
  const int level = ladder.level_for(10.0, quartic, quad);
  CHECK(ladder.radii[level] >= 10.0);
  CHECK(ladder.radii.size() == ladder.lambdas_W.size());
}

TEST_CASE("time-scaled potentials thread t through") {
  Potential quad = Potential::builtin("quadratic");
  quad.set_time_scale([](double t) { return 1.0 + t; });
  CHECK(quad.time_dependent());
  CHECK(quad.value(1.0, Vec{3.0, 4.0}) == doctest::Approx(25.0));
  CHECK(dist(quad.grad(3.0, Vec{1.0, 0.0}), Vec{4.0, 0.0}) < 1e-15);
  // The t-free forms stay unscaled.
  CHECK(quad.value(Vec{3.0, 4.0}) == doctest::Approx(12.5));
}
