#include "proxflow/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "proxflow/rng.hpp"

namespace proxflow {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Window half-width used to clip unbounded kinds for samplers.
constexpr double kSamplingWindow = 5.0;

std::string fmt_point(const Vec& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.dim(); ++i) os << (i ? ", " : "") << p[i];
  os << ")";
  return os.str();
}

// Closest candidate to p with deterministic handling of ties: among all
// candidates within tol_geom of the best distance, pick the lexicographic
// smallest and flag ambiguity when they genuinely differ in position.
ProjectionResult pick_closest(const Vec& p, const std::vector<Vec>& cands) {
  double best_d = kInf;
  for (const auto& q : cands) best_d = std::min(best_d, dist(p, q));
  ProjectionResult res;
  for (const auto& q : cands) {
    if (dist(p, q) > best_d + tol_geom) continue;
    if (res.point.dim() == 0) {
      res.point = q;
    } else {
      if (dist(q, res.point) > tol_geom) res.ambiguous = true;
      if (lex_less(q, res.point)) res.point = q;
    }
  }
  return res;
}

// Angle of (x, y) normalized into [theta0, theta0 + 2*pi).
double angle_from(double theta0, const Vec& p) {
  double th = std::atan2(p[1], p[0]);
  while (th < theta0) th += 2.0 * kPi;
  while (th >= theta0 + 2.0 * kPi) th -= 2.0 * kPi;
  return th;
}

Vec unit_at(double theta) { return Vec{std::cos(theta), std::sin(theta)}; }

}  // namespace

// ---------------------------------------------------------------------------
// Moreau decomposition
// ---------------------------------------------------------------------------

namespace {

MoreauSplit split_with_normal(const Vec& v, Vec v_n) {
  MoreauSplit s;
  s.tangent = v - v_n;
  s.normal = std::move(v_n);
  return s;
}

// Projection onto the cone spanned by one generator.
Vec project_ray(const Vec& v, const Vec& g) {
  const double t = std::max(0.0, dot(v, g));
  return t * g;
}

// Exact projection onto cone{g1, g2} by enumerating the active sets
// {both, g1, g2, none}; the true projection is one of the four.
Vec project_two_generator_cone(const Vec& v, const Vec& g1, const Vec& g2) {
  const double c = dot(g1, g2);
  const double b1 = dot(v, g1);
  const double b2 = dot(v, g2);

  Vec best(v.dim());
  double best_d2 = norm2(v);  // candidate 0

  auto consider = [&](const Vec& cand) {
    const double d2 = dist2(v, cand);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = cand;
    }
  };

  const double det = 1.0 - c * c;
  if (det > 1e-14) {
    const double a1 = (b1 - c * b2) / det;
    const double a2 = (b2 - c * b1) / det;
    if (a1 >= 0.0 && a2 >= 0.0) consider(a1 * g1 + a2 * g2);
  }
  consider(project_ray(v, g1));
  consider(project_ray(v, g2));
  return best;
}

// Dykstra's alternating projections onto the polar cone, which is the
// intersection of the halfspaces {w : <w, g_i> <= 0}. Returns v_T.
Vec dykstra_polar_projection(const Vec& v, const std::vector<Vec>& gens) {
  const int m = static_cast<int>(gens.size());
  Vec x = v;
  std::vector<Vec> corrections(m, Vec(v.dim()));
  for (int sweep = 0; sweep < 10000; ++sweep) {
    double change = 0.0;
    for (int i = 0; i < m; ++i) {
      const Vec y = x + corrections[i];
      const double t = std::max(0.0, dot(y, gens[i]));
      Vec xn = y - t * gens[i];
      corrections[i] = y - xn;
      change = std::max(change, dist(x, xn));
      x = std::move(xn);
    }
    if (change <= 0.1 * tol_num) break;
  }
  return x;
}

}  // namespace

MoreauSplit moreau_decompose(const Vec& v, const Cone& cone) {
  const std::size_t m = cone.generators.size();
  if (m == 0) return split_with_normal(v, Vec(v.dim()));
  if (m == 1) return split_with_normal(v, project_ray(v, cone.generators[0]));
  if (m == 2)
    return split_with_normal(
        v, project_two_generator_cone(v, cone.generators[0], cone.generators[1]));
  const Vec v_t = dykstra_polar_projection(v, cone.generators);
  MoreauSplit s;
  s.normal = v - v_t;
  s.tangent = v_t;
  return s;
}

// ---------------------------------------------------------------------------
// Domain base
// ---------------------------------------------------------------------------

bool Domain::contains(const Vec& p) const {
  return dist(p, project(p).point) <= tol_geom;
}

Cone Domain::normal_cone(const Vec& x) const {
  if (!contains(x))
    throw PointOutsideDomain(kind_name() + ": normal cone requested at " +
                             fmt_point(x) + " which is not in the domain");
  return normal_cone_impl(x);
}

Vec project_tangent(const Domain& domain, const Vec& x, const Vec& v) {
  return moreau_decompose(v, domain.normal_cone(x)).tangent;
}

bool product_projection_check(const Domain& domain, const std::vector<Vec>& points,
                              const std::vector<Vec>& displacements) {
  const std::size_t n = points.size();
  if (displacements.size() != n) return false;

  // Componentwise projection of the displaced stacked point.
  std::vector<Vec> displaced(n), proj(n);
  for (std::size_t i = 0; i < n; ++i) {
    displaced[i] = points[i] + displacements[i];
    proj[i] = domain.project(displaced[i]).point;
  }
  double proj_cost = 0.0;
  for (std::size_t i = 0; i < n; ++i) proj_cost += dist2(displaced[i], proj[i]);

  // Probe: no feasible stacked candidate may do strictly better. The
  // candidates mix independent feasible samples with projected local
  // perturbations of the claimed argmin.
  Rng rng(0x70726f64756374ULL);
  const auto box = domain.sampling_box();
  for (int probe = 0; probe < 200; ++probe) {
    double cand_cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Vec y(points[i].dim());
      if (probe % 2 == 0) {
        Vec delta(points[i].dim());
        for (int k = 0; k < delta.dim(); ++k) delta[k] = rng.uniform(-0.1, 0.1);
        y = domain.project(proj[i] + delta).point;
      } else {
        int tries = 0;
        do {
          y = rng.uniform_in_box(box.first, box.second);
        } while (!domain.contains(y) && ++tries < 10000);
        if (!domain.contains(y)) y = proj[i];
      }
      cand_cost += dist2(displaced[i], y);
    }
    if (cand_cost < proj_cost - tol_num) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// HalfSpace {x : <a, x> <= b}, |a| = 1
// ---------------------------------------------------------------------------

namespace {

class HalfSpaceDomain final : public Domain {
 public:
  HalfSpaceDomain(Vec normal, double offset)
      : normal_(normalized(normal)), offset_(offset) {
    eta_ = kInf;
    diameter_ = kInf;
    circumradius_ = kInf;
  }

  std::string kind_name() const override { return "half_space"; }
  int dim() const override { return normal_.dim(); }

  bool contains(const Vec& p) const override {
    return dot(normal_, p) - offset_ <= tol_geom;
  }

  ProjectionResult project(const Vec& p) const override {
    const double excess = dot(normal_, p) - offset_;
    if (excess <= 0.0) return {p, false};
    return {p - excess * normal_, false};
  }

  std::pair<Vec, Vec> sampling_box() const override {
    Vec lo(dim()), hi(dim());
    for (int i = 0; i < dim(); ++i) {
      lo[i] = -kSamplingWindow;
      hi[i] = kSamplingWindow;
    }
    return {lo, hi};
  }

 protected:
  Cone normal_cone_impl(const Vec& x) const override {
    if (std::abs(dot(normal_, x) - offset_) <= tol_corner) return Cone{{normal_}};
    return {};
  }

 private:
  Vec normal_;
  double offset_;
};

// ---------------------------------------------------------------------------
// Ball
// ---------------------------------------------------------------------------

class BallDomain final : public Domain {
 public:
  BallDomain(Vec center, double radius) : center_(std::move(center)), radius_(radius) {
    eta_ = kInf;
    diameter_ = 2.0 * radius_;
    circumradius_ = norm(center_) + radius_;
  }

  std::string kind_name() const override { return "ball"; }
  int dim() const override { return center_.dim(); }

  bool contains(const Vec& p) const override {
    return dist(p, center_) <= radius_ + tol_geom;
  }

  ProjectionResult project(const Vec& p) const override {
    const double r = dist(p, center_);
    if (r <= radius_) return {p, false};
    return {center_ + (radius_ / r) * (p - center_), false};
  }

  std::pair<Vec, Vec> sampling_box() const override {
    Vec lo = center_, hi = center_;
    for (int i = 0; i < dim(); ++i) {
      lo[i] -= radius_;
      hi[i] += radius_;
    }
    return {lo, hi};
  }

 protected:
  Cone normal_cone_impl(const Vec& x) const override {
    const double r = dist(x, center_);
    if (std::abs(r - radius_) <= tol_corner && r > 0.0)
      return Cone{{(1.0 / r) * (x - center_)}};
    return {};
  }

 private:
  Vec center_;
  double radius_;
};

// ---------------------------------------------------------------------------
// Box [lo, hi]
// ---------------------------------------------------------------------------

class BoxDomain final : public Domain {
 public:
  BoxDomain(Vec lo, Vec hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.dim() != hi_.dim()) throw ConfigError("box: lo/hi dimension mismatch");
    for (int i = 0; i < lo_.dim(); ++i)
      if (!(lo_[i] < hi_[i])) throw ConfigError("box: requires lo < hi per axis");
    eta_ = kInf;
    diameter_ = dist(lo_, hi_);
    double c2 = 0.0;
    for (int i = 0; i < lo_.dim(); ++i) {
      const double m = std::max(std::abs(lo_[i]), std::abs(hi_[i]));
      c2 += m * m;
    }
    circumradius_ = std::sqrt(c2);
  }

  std::string kind_name() const override { return "box"; }
  int dim() const override { return lo_.dim(); }

  bool contains(const Vec& p) const override {
    for (int i = 0; i < dim(); ++i)
      if (p[i] < lo_[i] - tol_geom || p[i] > hi_[i] + tol_geom) return false;
    return true;
  }

  ProjectionResult project(const Vec& p) const override {
    Vec q = p;
    for (int i = 0; i < dim(); ++i) q[i] = std::clamp(q[i], lo_[i], hi_[i]);
    return {q, false};
  }

  std::pair<Vec, Vec> sampling_box() const override { return {lo_, hi_}; }

 protected:
  Cone normal_cone_impl(const Vec& x) const override {
    Cone cone;
    for (int i = 0; i < dim(); ++i) {
      if (std::abs(x[i] - hi_[i]) <= tol_corner) {
        Vec e(dim());
        e[i] = 1.0;
        cone.generators.push_back(e);
      } else if (std::abs(x[i] - lo_[i]) <= tol_corner) {
        Vec e(dim());
        e[i] = -1.0;
        cone.generators.push_back(e);
      }
    }
    return cone;
  }

 private:
  Vec lo_, hi_;
};

// ---------------------------------------------------------------------------
// ConvexPolygon (2D, vertices counter-clockwise)
// ---------------------------------------------------------------------------

class ConvexPolygonDomain final : public Domain {
 public:
  explicit ConvexPolygonDomain(std::vector<Vec> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3) throw ConfigError("convex_polygon: needs >= 3 vertices");
    for (const auto& v : verts_)
      if (v.dim() != 2) throw ConfigError("convex_polygon: vertices must be planar");
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec e = verts_[(i + 1) % n] - verts_[i];
      if (norm(e) <= tol_geom) throw ConfigError("convex_polygon: degenerate edge");
      normals_.push_back(normalized(Vec{e[1], -e[0]}));  // outward for CCW
    }
    // Convexity: every vertex on the inner side of every edge.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (dot(normals_[i], verts_[j] - verts_[i]) > tol_geom)
          throw ConfigError("convex_polygon: vertices not convex/CCW");
    eta_ = kInf;
    diameter_ = 0.0;
    circumradius_ = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      circumradius_ = std::max(circumradius_, norm(verts_[i]));
      for (std::size_t j = i + 1; j < n; ++j)
        diameter_ = std::max(diameter_, dist(verts_[i], verts_[j]));
    }
  }

  std::string kind_name() const override { return "convex_polygon"; }
  int dim() const override { return 2; }

  bool contains(const Vec& p) const override {
    for (std::size_t i = 0; i < verts_.size(); ++i)
      if (dot(normals_[i], p - verts_[i]) > tol_geom) return false;
    return true;
  }

  ProjectionResult project(const Vec& p) const override {
    if (contains(p)) return {p, false};
    Vec best(2);
    double best_d2 = kInf;
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& a = verts_[i];
      const Vec e = verts_[(i + 1) % n] - a;
      const double t = std::clamp(dot(p - a, e) / norm2(e), 0.0, 1.0);
      const Vec q = a + t * e;
      const double d2 = dist2(p, q);
      if (d2 < best_d2) {
        best_d2 = d2;
        best = q;
      }
    }
    return {best, false};
  }

  std::pair<Vec, Vec> sampling_box() const override {
    Vec lo = verts_[0], hi = verts_[0];
    for (const auto& v : verts_)
      for (int i = 0; i < 2; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
    return {lo, hi};
  }

 protected:
  Cone normal_cone_impl(const Vec& x) const override {
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (dist(x, verts_[i]) <= tol_corner)
        return Cone{{normals_[(i + n - 1) % n], normals_[i]}};
    Cone cone;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& a = verts_[i];
      const Vec e = verts_[(i + 1) % n] - a;
      const double t = dot(x - a, e) / norm2(e);
      if (t < -tol_corner || t > 1.0 + tol_corner) continue;
      if (std::abs(dot(normals_[i], x - a)) <= tol_corner) {
        cone.generators.push_back(normals_[i]);
        break;  // not near a vertex, so at most one edge is active
      }
    }
    return cone;
  }

 private:
  std::vector<Vec> verts_;
  std::vector<Vec> normals_;
};

}  // namespace

// ---------------------------------------------------------------------------
// AnnulusSector {r_in <= r <= r_out, theta_min <= theta <= theta_max}
// ---------------------------------------------------------------------------

namespace {

class AnnulusSectorDomain final : public Domain {
 public:
  AnnulusSectorDomain(double r_in, double r_out, double th_min, double th_max)
      : r_in_(r_in), r_out_(r_out), th_min_(th_min), th_max_(th_max) {
    if (!(0.0 < r_in && r_in < r_out))
      throw ConfigError("annulus_sector: requires 0 < r_in < r_out");
    const double span = th_max - th_min;
    if (!(span > 0.0 && span < 2.0 * kPi))
      throw ConfigError("annulus_sector: requires 0 < theta_max - theta_min < 2*pi");
    // Inner corners are the binding pair when the sector spans more than a
    // half turn; the inner arc radius binds otherwise.
    eta_ = r_in * std::min(1.0, std::sin(0.5 * span));
    diameter_ = span >= kPi ? 2.0 * r_out : 2.0 * r_out * std::sin(0.5 * span);
    circumradius_ = r_out;
  }

  std::string kind_name() const override { return "annulus_sector"; }
  int dim() const override { return 2; }

  bool contains(const Vec& p) const override {
    const double r = norm(p);
    if (r >= r_in_ && r <= r_out_ && angle_in(angle_from(th_min_, p))) return true;
    return dist(p, project(p).point) <= tol_geom;
  }

  ProjectionResult project(const Vec& p) const override {
    const double r = norm(p);
    if (r >= r_in_ && r <= r_out_ && angle_in(angle_from(th_min_, p))) return {p, false};

    std::vector<Vec> cands;
    if (r > 0.0 && angle_in(angle_from(th_min_, p))) {
      if (r < r_in_) cands.push_back((r_in_ / r) * p);
      if (r > r_out_) cands.push_back((r_out_ / r) * p);
    }
    for (double th : {th_min_, th_max_}) {
      const Vec u = unit_at(th);
      const double s = std::clamp(dot(p, u), r_in_, r_out_);
      cands.push_back(s * u);
    }
    for (double th : {th_min_, th_max_})
      for (double rr : {r_in_, r_out_}) cands.push_back(rr * unit_at(th));
    return pick_closest(p, cands);
  }

  std::pair<Vec, Vec> sampling_box() const override {
    Vec lo{-r_out_, -r_out_}, hi{r_out_, r_out_};
    return {lo, hi};
  }

 protected:
  Cone normal_cone_impl(const Vec& x) const override {
    // Corner cones first: adjacent arc and edge normals.
    for (double th : {th_min_, th_max_}) {
      const Vec u = unit_at(th);
      if (dist(x, r_in_ * u) <= tol_corner) return Cone{{-1.0 * u, edge_normal(th)}};
      if (dist(x, r_out_ * u) <= tol_corner) return Cone{{u, edge_normal(th)}};
    }
    const double r = norm(x);
    const Vec radial = (1.0 / r) * x;
    if (std::abs(r - r_in_) <= tol_corner) return Cone{{-1.0 * radial}};
    if (std::abs(r - r_out_) <= tol_corner) return Cone{{radial}};
    for (double th : {th_min_, th_max_}) {
      const Vec n = edge_normal(th);
      const double s = dot(x, unit_at(th));
      if (std::abs(dot(x, n)) <= tol_corner && s >= r_in_ - tol_corner &&
          s <= r_out_ + tol_corner)
        return Cone{{n}};
    }
    return {};
  }

 private:
  bool angle_in(double th_normalized) const { return th_normalized <= th_max_; }

  // Outward normal across the straight edge at angle th.
  Vec edge_normal(double th) const {
    const Vec that{-std::sin(th), std::cos(th)};
    return th == th_min_ ? -1.0 * that : that;
  }

  double r_in_, r_out_, th_min_, th_max_;
};

// ---------------------------------------------------------------------------
// DiskWithBite: {|x| <= R} minus the open ball B_rho(c)
// ---------------------------------------------------------------------------

class DiskWithBiteDomain final : public Domain {
 public:
  DiskWithBiteDomain(double radius, Vec center, double rho)
      : radius_(radius), bite_c_(std::move(center)), rho_(rho) {
    if (bite_c_.dim() != 2) throw ConfigError("disk_with_bite: planar only");
    if (!(radius > 0.0 && rho > 0.0))
      throw ConfigError("disk_with_bite: radii must be positive");
    const double cc = norm(bite_c_);
    if (cc <= radius_ - rho_ + tol_geom)
      throw ConfigError("disk_with_bite: bite swallowed inside the disk boundary");
    if (cc >= radius_ + rho_) {
      // Bite misses the disk entirely: plain disk.
      has_corners_ = false;
    } else if (cc + radius_ <= rho_) {
      throw ConfigError("disk_with_bite: bite removes the whole disk");
    } else {
      has_corners_ = true;
      // Circle-circle intersection.
      const double a = (radius_ * radius_ - rho_ * rho_ + cc * cc) / (2.0 * cc);
      const double h2 = radius_ * radius_ - a * a;
      if (h2 <= 0.0) throw ConfigError("disk_with_bite: tangent bite unsupported");
      const double h = std::sqrt(h2);
      const Vec u = (1.0 / cc) * bite_c_;
      const Vec t{-u[1], u[0]};
      corners_[0] = a * u + h * t;
      corners_[1] = a * u - h * t;
    }
    eta_ = rho_;  // the removed ball realizes the exclusion ball exactly
    circumradius_ = radius_;
    diameter_ = 2.0 * radius_;
    validate_diameter();
  }

  std::string kind_name() const override { return "disk_with_bite"; }
  int dim() const override { return 2; }

  bool contains(const Vec& p) const override {
    return norm(p) <= radius_ + tol_geom && dist(p, bite_c_) >= rho_ - tol_geom;
  }

  ProjectionResult project(const Vec& p) const override {
    if (contains(p)) return {p, false};
    std::vector<Vec> cands;
    const double r = norm(p);
    if (r > radius_ && r > 0.0) {
      const Vec q = (radius_ / r) * p;
      if (dist(q, bite_c_) >= rho_ - tol_geom) cands.push_back(q);
    }
    const double rb = dist(p, bite_c_);
    if (rb < rho_ && rb > 0.0) {
      const Vec q = bite_c_ + (rho_ / rb) * (p - bite_c_);
      if (norm(q) <= radius_ + tol_geom) cands.push_back(q);
    }
    if (has_corners_) {
      cands.push_back(corners_[0]);
      cands.push_back(corners_[1]);
    }
    return pick_closest(p, cands);
  }

  std::pair<Vec, Vec> sampling_box() const override {
    Vec lo{-radius_, -radius_}, hi{radius_, radius_};
    return {lo, hi};
  }

 protected:
  Cone normal_cone_impl(const Vec& x) const override {
    if (has_corners_)
      for (const auto& corner : corners_)
        if (dist(x, corner) <= tol_corner)
          return Cone{{normalized(x), normalized(bite_c_ - x)}};
    const double r = norm(x);
    if (std::abs(r - radius_) <= tol_corner) return Cone{{(1.0 / r) * x}};
    if (std::abs(dist(x, bite_c_) - rho_) <= tol_corner)
      return Cone{{normalized(bite_c_ - x)}};
    return {};
  }

 private:
  void validate_diameter() {
    // Diam = 2R requires a surviving antipodal pair on the rim.
    for (int k = 0; k < 4096; ++k) {
      const double th = kPi * static_cast<double>(k) / 4096.0;
      const Vec u = unit_at(th);
      if (contains(radius_ * u) && contains(-radius_ * u)) return;
    }
    throw ConfigError("disk_with_bite: no antipodal rim pair survives; declared "
                      "diameter 2R would be wrong for these parameters");
  }

  double radius_;
  Vec bite_c_;
  double rho_;
  bool has_corners_ = false;
  Vec corners_[2];
};

// ---------------------------------------------------------------------------
// PacManSector: disk sector with an inside corner at the origin.
// Deliberately non-prox-regular (eta = 0 sentinel).
// ---------------------------------------------------------------------------

class PacManSectorDomain final : public Domain {
 public:
  PacManSectorDomain(double r_max, double th_min, double th_max)
      : r_max_(r_max), th_min_(th_min), th_max_(th_max) {
    const double span = th_max - th_min;
    if (!(span > kPi && span < 2.0 * kPi))
      throw ConfigError("pacman_sector: requires pi < theta_max - theta_min < 2*pi "
                        "(the inside corner is the point)");
    if (!(r_max > 0.0)) throw ConfigError("pacman_sector: r_max must be positive");
    eta_ = 0.0;  // sentinel: not prox-regular
    diameter_ = 2.0 * r_max_;
    circumradius_ = r_max_;
  }

  std::string kind_name() const override { return "pacman_sector"; }
  int dim() const override { return 2; }

  bool contains(const Vec& p) const override {
    const double r = norm(p);
    if (r <= tol_geom) return true;
    if (r <= r_max_ && angle_in(angle_from(th_min_, p))) return true;
    return dist(p, project(p).point) <= tol_geom;
  }

  ProjectionResult project(const Vec& p) const override {
    const double r = norm(p);
    if (r <= tol_geom) return {p, false};
    if (r <= r_max_ && angle_in(angle_from(th_min_, p))) return {p, false};

    std::vector<Vec> cands;
    if (angle_in(angle_from(th_min_, p)) && r > r_max_)
      cands.push_back((r_max_ / r) * p);
    for (double th : {th_min_, th_max_}) {
      const Vec u = unit_at(th);
      const double s = std::clamp(dot(p, u), 0.0, r_max_);
      cands.push_back(s * u);
    }
    return pick_closest(p, cands);
  }

  std::pair<Vec, Vec> sampling_box() const override {
    Vec lo{-r_max_, -r_max_}, hi{r_max_, r_max_};
    return {lo, hi};
  }

 protected:
  Cone normal_cone_impl(const Vec& x) const override {
    // The proximal normal cone at the inside corner is {0}: every outside
    // direction has a strictly closer point on one of the edges.
    if (norm(x) <= tol_corner) return {};
    for (double th : {th_min_, th_max_}) {
      const Vec u = unit_at(th);
      if (dist(x, r_max_ * u) <= tol_corner)
        return Cone{{u, edge_normal(th)}};
    }
    const double r = norm(x);
    if (std::abs(r - r_max_) <= tol_corner) return Cone{{(1.0 / r) * x}};
    for (double th : {th_min_, th_max_}) {
      const double s = dot(x, unit_at(th));
      if (std::abs(dot(x, edge_normal(th))) <= tol_corner && s >= -tol_corner &&
          s <= r_max_ + tol_corner)
        return Cone{{edge_normal(th)}};
    }
    return {};
  }

 private:
  bool angle_in(double th_normalized) const { return th_normalized <= th_max_; }

  Vec edge_normal(double th) const {
    const Vec that{-std::sin(th), std::cos(th)};
    return th == th_min_ ? -1.0 * that : that;
  }

  double r_max_, th_min_, th_max_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

std::unique_ptr<Domain> Domain::half_space(Vec normal, double offset) {
  return std::make_unique<HalfSpaceDomain>(std::move(normal), offset);
}
std::unique_ptr<Domain> Domain::ball(Vec center, double radius) {
  if (!(radius > 0.0)) throw ConfigError("ball: radius must be positive");
  return std::make_unique<BallDomain>(std::move(center), radius);
}
std::unique_ptr<Domain> Domain::box(Vec lo, Vec hi) {
  return std::make_unique<BoxDomain>(std::move(lo), std::move(hi));
}
std::unique_ptr<Domain> Domain::convex_polygon(std::vector<Vec> vertices) {
  return std::make_unique<ConvexPolygonDomain>(std::move(vertices));
}
std::unique_ptr<Domain> Domain::annulus_sector(double r_in, double r_out,
                                               double theta_min, double theta_max) {
  return std::make_unique<AnnulusSectorDomain>(r_in, r_out, theta_min, theta_max);
}
std::unique_ptr<Domain> Domain::disk_with_bite(double radius, Vec bite_center,
                                               double bite_radius) {
  return std::make_unique<DiskWithBiteDomain>(radius, std::move(bite_center),
                                              bite_radius);
}
std::unique_ptr<Domain> Domain::pacman_sector(double r_max, double theta_min,
                                              double theta_max) {
  return std::make_unique<PacManSectorDomain>(r_max, theta_min, theta_max);
}

}  // namespace proxflow
