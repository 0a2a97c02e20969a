#pragma once

#include <memory>
#include <string>
#include <vector>

#include "proxflow/geometry.hpp"
#include "proxflow/rng.hpp"

namespace proxflow::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  int moreau_samples = 10000;  // per domain
  int prox_triples = 10000;    // per domain
  int ot_instances = 200;
  int ot_max_n = 7;
  int shard_instances = 60;
  bool quick = false;

  static SuiteOptions quick_options() {
    SuiteOptions o;
    o.moreau_samples = 2000;
    o.prox_triples = 2000;
    o.ot_instances = 60;
    o.shard_instances = 20;
    o.quick = true;
    return o;
  }
};

// Named instances of every built-in prox-regular domain (PacManSector is
// deliberately excluded: it is the non-prox-regular counterexample).
std::vector<std::pair<std::string, std::shared_ptr<Domain>>> builtin_prox_regular_domains();

// Boundary point with a unit proximal normal, generated by projecting an
// outside sample: x in P_Omega(p) makes (p - x)/|p - x| a proximal normal.
struct BoundarySample {
  Vec x;
  Vec normal;
};
BoundarySample sample_boundary(const Domain& domain, Rng& rng);

Vec sample_inside(const Domain& domain, Rng& rng);

// Cone identities: Moreau orthogonality, Pythagoras, idempotence of the
// tangent projection, convexity of v -> |P_x(v)|^2, and the convex-domain
// monotonicity of the projection residual.
std::vector<Check> geometry_suite(const SuiteOptions& opt);

// Prox inequality (hypomonotonicity) and ball-exclusion sampling per
// built-in domain with its declared eta; includes the corrupted-eta
// negative control on the bitten disk.
std::vector<Check> prox_regularity_suite(const SuiteOptions& opt);

// OT exactness: permutation-enumeration oracle for equal masses, shard
// reduction for rational masses, marginals, metric axioms, and the
// singleton-distance grid oracle.
std::vector<Check> transport_suite(const SuiteOptions& opt);

// Energy monotonicity / dissipation identity refinement, catching-up vs
// projected-Euler consistency, Cauchy step refinement, particle-count
// stability, singleton decay, support growth.
std::vector<Check> dynamics_suite(const SuiteOptions& opt);

}  // namespace proxflow::verify
