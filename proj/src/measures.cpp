#include "proxflow/measures.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "proxflow/errors.hpp"
#include "proxflow/rng.hpp"

namespace proxflow {

void ParticleMeasure::validate(const Domain* domain) const {
  if (positions.empty()) throw Error("particle measure: needs at least one particle");
  if (positions.size() != masses.size())
    throw Error("particle measure: positions/masses size mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!(masses[i] > 0.0)) throw Error("particle measure: masses must be positive");
    if (!finite(positions[i])) throw Error("particle measure: non-finite position");
    sum += masses[i];
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw Error("particle measure: masses sum to " + std::to_string(sum) +
                ", expected 1 within 1e-12");
  if (domain) {
    for (const auto& x : positions)
      if (!domain->contains(x))
        throw Error("particle measure: position outside the domain");
  }
}

double ParticleMeasure::mass_sum() const {
  double s = 0.0;
  for (double m : masses) s += m;
  return s;
}

Vec ParticleMeasure::center_of_mass() const {
  Vec c(dim());
  for (int i = 0; i < size(); ++i) c += masses[i] * positions[i];
  return c;
}

double ParticleMeasure::support_radius() const {
  double r = 0.0;
  for (const auto& x : positions) r = std::max(r, norm(x));
  return r;
}

double energy(const ParticleMeasure& mu, const Potential& W, const Potential& V,
              double t) {
  const int n = mu.size();
  double interaction = 0.0;
  Vec diff(mu.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < mu.dim(); ++k) diff[k] = mu.positions[i][k] - mu.positions[j][k];
      interaction += mu.masses[i] * mu.masses[j] * W.value(t, diff);
    }
  }
  double external = 0.0;
  for (int i = 0; i < n; ++i) external += mu.masses[i] * V.value(t, mu.positions[i]);
  return 0.5 * interaction + external;
}

void velocity_field_into(const ParticleMeasure& mu, const Potential& W,
                         const Potential& V, double t, std::vector<Vec>& out) {
  const int n = mu.size();
  const int d = mu.dim();
  out.assign(n, Vec(d));
  std::vector<double> diff(d), g(d);
  for (int i = 0; i < n; ++i) {
    const double* xi = mu.positions[i].c.data();
    double* vi = out[i].c.data();
    for (int j = 0; j < n; ++j) {
      const double* xj = mu.positions[j].c.data();
      for (int k = 0; k < d; ++k) diff[k] = xi[k] - xj[k];
      W.grad_into(t, diff.data(), d, g.data());
      const double m = mu.masses[j];
      for (int k = 0; k < d; ++k) vi[k] -= m * g[k];
    }
    V.grad_into(t, xi, d, g.data());
    for (int k = 0; k < d; ++k) vi[k] -= g[k];
  }
}

std::vector<Vec> velocity_field(const ParticleMeasure& mu, const Potential& W,
                                const Potential& V, double t) {
  std::vector<Vec> out;
  velocity_field_into(mu, W, V, t, out);
  return out;
}

double dissipation(const ParticleMeasure& mu, const Domain& domain, const Potential& W,
                   const Potential& V, double t) {
  std::vector<Vec> v;
  velocity_field_into(mu, W, V, t, v);
  double slope = 0.0;
  for (int i = 0; i < mu.size(); ++i) {
    const Vec pv = project_tangent(domain, mu.positions[i], v[i]);
    slope += mu.masses[i] * norm2(pv);
  }
  return slope;
}

namespace {

ParticleMeasure from_points(std::vector<Vec> pts) {
  ParticleMeasure mu;
  const double m = 1.0 / static_cast<double>(pts.size());
  mu.masses.assign(pts.size(), m);
  mu.positions = std::move(pts);
  return mu;
}

}  // namespace

ParticleMeasure discretize_initial(const InitialSpec& spec, const Domain& domain) {
  ParticleMeasure mu;
  switch (spec.recipe) {
    case InitialSpec::Recipe::Grid: {
      const int k = spec.grid_per_axis;
      if (k < 1) throw ConfigError("grid recipe: grid_per_axis must be >= 1");
      const auto [lo, hi] = domain.sampling_box();
      const int d = lo.dim();
      std::vector<Vec> pts;
      std::vector<int> idx(d, 0);
      while (true) {
        Vec p(d);
        for (int a = 0; a < d; ++a) {
          const double frac = k == 1 ? 0.5 : static_cast<double>(idx[a]) / (k - 1);
          p[a] = lo[a] + frac * (hi[a] - lo[a]);
        }
        if (domain.contains(p)) pts.push_back(p);
        int a = 0;
        for (; a < d; ++a) {
          if (++idx[a] < k) break;
          idx[a] = 0;
        }
        if (a == d) break;
      }
      if (pts.empty()) throw EmptySample("grid recipe produced no points inside the domain");
      mu = from_points(std::move(pts));
      break;
    }
    case InitialSpec::Recipe::Random: {
      if (spec.n < 1) throw ConfigError("random recipe: n must be >= 1");
      Rng rng(spec.seed);
      auto [lo, hi] = domain.sampling_box();
      if (spec.radius > 0.0)
        for (int k = 0; k < lo.dim(); ++k) {
          lo[k] = std::max(lo[k], -spec.radius);
          hi[k] = std::min(hi[k], spec.radius);
        }
      std::vector<Vec> pts;
      long attempts = 0;
      const long max_attempts = 10000000L;
      while (static_cast<int>(pts.size()) < spec.n && attempts < max_attempts) {
        ++attempts;
        Vec p = rng.uniform_in_box(lo, hi);
        if (spec.radius > 0.0 && norm(p) > spec.radius) continue;
        if (domain.contains(p)) pts.push_back(std::move(p));
      }
      if (static_cast<int>(pts.size()) < spec.n)
        throw EmptySample("random recipe: rejection sampling failed to fill the domain");
      mu = from_points(std::move(pts));
      break;
    }
    case InitialSpec::Recipe::Explicit: {
      if (!spec.file.empty()) {
        mu = read_measure_csv(spec.file);
      } else {
        if (spec.points.empty()) throw EmptySample("explicit recipe: no points given");
        mu.positions = spec.points;
        mu.masses = spec.masses;
      }
      break;
    }
  }
  mu.validate(&domain);
  return mu;
}

ParticleMeasure read_measure_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open measure file '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw Error("empty measure file '" + path + "'");
  int d = 0;
  {
    std::stringstream header(line);
    std::string col;
    std::vector<std::string> cols;
    while (std::getline(header, col, ',')) cols.push_back(col);
    if (cols.size() < 2 || cols.back() != "mass")
      throw Error("measure file '" + path + "': expected header x1,...,xd,mass");
    d = static_cast<int>(cols.size()) - 1;
  }
  ParticleMeasure mu;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    Vec p(d);
    for (int i = 0; i < d; ++i) {
      if (!std::getline(row, cell, ',')) throw Error("measure file: short row");
      p[i] = std::stod(cell);
    }
    if (!std::getline(row, cell, ',')) throw Error("measure file: missing mass");
    mu.positions.push_back(std::move(p));
    mu.masses.push_back(std::stod(cell));
  }
  if (mu.positions.empty()) throw EmptySample("measure file '" + path + "' has no rows");
  return mu;
}

void write_measure_csv(const std::string& path, const ParticleMeasure& mu) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write measure file '" + path + "'");
  out << std::setprecision(17);
  for (int i = 0; i < mu.dim(); ++i) out << "x" << (i + 1) << ",";
  out << "mass\n";
  for (int i = 0; i < mu.size(); ++i) {
    for (int k = 0; k < mu.dim(); ++k) out << mu.positions[i][k] << ",";
    out << mu.masses[i] << "\n";
  }
}

}  // namespace proxflow
