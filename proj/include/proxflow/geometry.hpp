#pragma once

#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "proxflow/errors.hpp"
#include "proxflow/vec.hpp"

namespace proxflow {

// Geometric tolerances used throughout. tol_geom bounds boundary
// membership, tol_corner snaps near-vertex points onto corner cones,
// tol_num bounds the cone decomposition residuals.
inline constexpr double tol_geom = 1e-12;
inline constexpr double tol_corner = 1e-9;
inline constexpr double tol_num = 1e-10;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Finitely generated closed convex cone with apex at the origin, stored
// by its unit generators. The empty generator list encodes the zero cone
// {0} (interior points of a domain).
struct Cone {
  std::vector<Vec> generators;

  bool is_zero() const { return generators.empty(); }
  int dim() const { return generators.empty() ? 0 : generators.front().dim(); }
};

struct MoreauSplit {
  Vec tangent;  // projection of v onto the polar (tangent) cone
  Vec normal;   // projection of v onto the normal cone
};

// Orthogonal decomposition v = v_T + v_N with v_N in the cone, v_T in its
// polar, <v_T, v_N> = 0. Closed form for <= 2 generators; Dykstra's
// alternating projection onto the polar halfspaces otherwise.
MoreauSplit moreau_decompose(const Vec& v, const Cone& cone);

struct ProjectionResult {
  Vec point;
  // Set when two candidate closest points at (numerically) equal distance
  // differ in position; the returned point is the lexicographic smallest.
  bool ambiguous = false;
};

class Domain {
 public:
  virtual ~Domain() = default;

  virtual std::string kind_name() const = 0;
  virtual int dim() const = 0;

  // Closed-set membership within tol_geom at the boundary.
  virtual bool contains(const Vec& p) const;

  // Closest point on the domain; identity on the domain itself.
  virtual ProjectionResult project(const Vec& p) const = 0;

  // Proximal normal cone N(domain, x). Throws PointOutsideDomain when
  // contains(x) is false. Interior points get the zero cone, smooth
  // boundary points a single ray, corner points the adjacent normals.
  Cone normal_cone(const Vec& x) const;

  double eta() const { return eta_; }
  double diameter() const { return diameter_; }
  // sup |x| over the domain; used for L-inf gradient bounds on it.
  double circumradius() const { return circumradius_; }
  bool bounded() const { return diameter_ < kInf; }
  bool prox_regular() const { return eta_ > 0.0; }

  // Validation hook: replaces the declared eta (the prox-inequality
  // sampler is expected to reject bad values).
  void override_eta(double eta) { eta_ = eta; }

  // Finite axis-aligned window containing the domain (clipped to a fixed
  // window for unbounded kinds); used by rejection samplers only.
  virtual std::pair<Vec, Vec> sampling_box() const = 0;

  static std::unique_ptr<Domain> half_space(Vec normal, double offset);
  static std::unique_ptr<Domain> ball(Vec center, double radius);
  static std::unique_ptr<Domain> box(Vec lo, Vec hi);
  static std::unique_ptr<Domain> convex_polygon(std::vector<Vec> vertices);
  static std::unique_ptr<Domain> annulus_sector(double r_in, double r_out,
                                                double theta_min, double theta_max);
  static std::unique_ptr<Domain> disk_with_bite(double radius, Vec bite_center,
                                                double bite_radius);
  static std::unique_ptr<Domain> pacman_sector(double r_max, double theta_min,
                                               double theta_max);

 protected:
  virtual Cone normal_cone_impl(const Vec& x) const = 0;

  double eta_ = kInf;
  double diameter_ = kInf;
  double circumradius_ = kInf;
};

// P_x(v): projection of v onto the tangent cone T(domain, x), computed
// through the Moreau decomposition against the normal cone at x.
Vec project_tangent(const Domain& domain, const Vec& x, const Vec& v);

// Checks the product rule proj_{Omega^n} = (proj_Omega, ..., proj_Omega)
// on the stacked points x_i + d_i: the componentwise projection must be
// the argmin over Omega^n, probed with seeded random feasible candidates.
bool product_projection_check(const Domain& domain, const std::vector<Vec>& points,
                              const std::vector<Vec>& displacements);

}  // namespace proxflow
