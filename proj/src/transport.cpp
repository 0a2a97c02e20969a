#include "proxflow/transport.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "proxflow/errors.hpp"

namespace proxflow {

double TransportPlan::row_marginal(int i) const {
  double s = 0.0;
  for (const auto& e : entries)
    if (e.i == i) s += e.mass;
  return s;
}

double TransportPlan::col_marginal(int j) const {
  double s = 0.0;
  for (const auto& e : entries)
    if (e.j == j) s += e.mass;
  return s;
}

namespace {

// Transportation simplex over the dense bipartite problem. The basis is
// a spanning tree on rows + cols with exactly n + m - 1 cells, kept as a
// flat cell list plus per-node adjacency.
class TransportationSimplex {
 public:
  TransportationSimplex(const std::vector<double>& supply,
                        const std::vector<double>& demand,
                        const std::vector<double>& cost)
      : n_(static_cast<int>(supply.size())),
        m_(static_cast<int>(demand.size())),
        supply_(supply),
        demand_(demand),
        cost_(cost) {
    double scale = 1.0;
    for (double c : cost_) scale = std::max(scale, std::abs(c));
    enter_tol_ = 1e-11 * scale;
    cert_tol_ = 1e-8 * scale;
  }

  void solve() {
    northwest_corner();
    const long max_pivots = 1000000L + 64L * static_cast<long>(n_) * m_;
    for (long pivot = 0;; ++pivot) {
      if (pivot > max_pivots)
        throw SolverStall("transportation simplex: pivot limit exceeded");
      compute_duals();
      const int entering = find_entering_bland();
      if (entering < 0) break;
      pivot_on(entering);
    }
    verify_certificate();
  }

  double objective() const {
    double total = 0.0;
    for (const auto& c : cells_) total += c.flow * cost_[idx(c.i, c.j)];
    return total;
  }

  TransportPlan plan() const {
    TransportPlan p;
    p.source_n = n_;
    p.target_n = m_;
    for (const auto& c : cells_)
      if (c.flow > 0.0) p.entries.push_back({c.i, c.j, c.flow});
    return p;
  }

 private:
  struct Cell {
    int i, j;
    double flow;
  };

  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(j);
  }

  void northwest_corner() {
    cells_.clear();
    int i = 0, j = 0;
    double s = supply_[0], t = demand_[0];
    while (true) {
      const double q = std::min(s, t);
      cells_.push_back({i, j, q});
      s -= q;
      t -= q;
      if (i == n_ - 1 && j == m_ - 1) break;
      if (s == 0.0 && i < n_ - 1) {
        ++i;
        s = supply_[i];
      } else if (j < m_ - 1) {
        ++j;
        t = demand_[j];
      } else {
        // Rounding drift exhausted the last column early; pad the
        // remaining rows with degenerate cells.
        ++i;
        s = supply_[i];
      }
    }
    rebuild_adjacency();
  }

  void rebuild_adjacency() {
    row_cells_.assign(n_, {});
    col_cells_.assign(m_, {});
    for (int k = 0; k < static_cast<int>(cells_.size()); ++k) {
      row_cells_[cells_[k].i].push_back(k);
      col_cells_[cells_[k].j].push_back(k);
    }
  }

  // u_i + v_j = c_ij on basic cells; BFS over the spanning tree.
  void compute_duals() {
    u_.assign(n_, 0.0);
    v_.assign(m_, 0.0);
    std::vector<char> row_done(n_, 0), col_done(m_, 0);
    std::queue<int> queue;  // nodes: rows [0, n), cols [n, n + m)
    u_[0] = 0.0;
    row_done[0] = 1;
    queue.push(0);
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop();
      if (node < n_) {
        for (int k : row_cells_[node]) {
          const int j = cells_[k].j;
          if (!col_done[j]) {
            v_[j] = cost_[idx(node, j)] - u_[node];
            col_done[j] = 1;
            queue.push(n_ + j);
          }
        }
      } else {
        const int j = node - n_;
        for (int k : col_cells_[j]) {
          const int i = cells_[k].i;
          if (!row_done[i]) {
            u_[i] = cost_[idx(i, j)] - v_[j];
            row_done[i] = 1;
            queue.push(i);
          }
        }
      }
    }
    for (int i = 0; i < n_; ++i)
      if (!row_done[i]) throw SolverStall("transportation simplex: basis not a spanning tree");
    for (int j = 0; j < m_; ++j)
      if (!col_done[j]) throw SolverStall("transportation simplex: basis not a spanning tree");
  }

  // Bland's rule: the first (smallest i * m + j) cell with a negative
  // reduced cost enters. Guarantees termination under degeneracy.
  int find_entering_bland() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j)
        if (cost_[idx(i, j)] - u_[i] - v_[j] < -enter_tol_) return i * m_ + j;
    return -1;
  }

  void pivot_on(int entering) {
    const int ei = entering / m_;
    const int ej = entering % m_;

    // Path from row ei to col ej through the basis tree.
    const int nodes = n_ + m_;
    std::vector<int> parent_node(nodes, -1), parent_cell(nodes, -1);
    std::vector<char> seen(nodes, 0);
    std::queue<int> queue;
    seen[ei] = 1;
    queue.push(ei);
    while (!queue.empty() && !seen[n_ + ej]) {
      const int node = queue.front();
      queue.pop();
      const auto& adjacent = node < n_ ? row_cells_[node] : col_cells_[node - n_];
      for (int k : adjacent) {
        const int other = node < n_ ? n_ + cells_[k].j : cells_[k].i;
        if (!seen[other]) {
          seen[other] = 1;
          parent_node[other] = node;
          parent_cell[other] = k;
          queue.push(other);
        }
      }
    }
    if (!seen[n_ + ej]) throw SolverStall("transportation simplex: disconnected basis");

    std::vector<int> path;  // cell indices, from col ej back to row ei
    for (int node = n_ + ej; node != ei; node = parent_node[node])
      path.push_back(parent_cell[node]);
    std::reverse(path.begin(), path.end());

    // Entering gets +theta; along the path flows alternate -, +, -, ...
    double theta = kInf;
    int leaving = -1;
    long leaving_key = 0;
    for (std::size_t p = 0; p < path.size(); p += 2) {
      const Cell& c = cells_[path[p]];
      const long key = static_cast<long>(c.i) * m_ + c.j;
      if (c.flow < theta || (c.flow == theta && (leaving < 0 || key < leaving_key))) {
        theta = c.flow;
        leaving = path[p];
        leaving_key = key;
      }
    }

    for (std::size_t p = 0; p < path.size(); ++p)
      cells_[path[p]].flow += (p % 2 == 0) ? -theta : theta;
    cells_[leaving] = {ei, ej, theta};
    rebuild_adjacency();
  }

  void verify_certificate() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j)
        if (cost_[idx(i, j)] - u_[i] - v_[j] < -cert_tol_)
          throw SolverStall("transportation simplex: terminated without a dual "
                            "feasibility certificate");
    for (const auto& c : cells_)
      if (std::abs(cost_[idx(c.i, c.j)] - u_[c.i] - v_[c.j]) > cert_tol_)
        throw SolverStall("transportation simplex: complementary slackness violated");
  }

  int n_, m_;
  std::vector<double> supply_, demand_, cost_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> row_cells_, col_cells_;
  std::vector<double> u_, v_;
  double enter_tol_, cert_tol_;
};

}  // namespace

OTResult wasserstein2(const ParticleMeasure& mu, const ParticleMeasure& nu) {
  if (mu.size() == 0 || nu.size() == 0)
    throw Error("wasserstein2: measures must be nonempty");
  if (mu.dim() != nu.dim())
    throw Error("wasserstein2: dimension mismatch (" + std::to_string(mu.dim()) +
                " vs " + std::to_string(nu.dim()) + ")");
  const int n = mu.size();
  const int m = nu.size();
  std::vector<double> cost(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      cost[static_cast<std::size_t>(i) * m + j] = dist2(mu.positions[i], nu.positions[j]);

  TransportationSimplex simplex(mu.masses, nu.masses, cost);
  simplex.solve();

  OTResult res;
  res.plan = simplex.plan();
  res.distance = std::sqrt(std::max(0.0, simplex.objective()));
  return res;
}

SingletonProjection distance_to_singletons(const ParticleMeasure& mu) {
  SingletonProjection s;
  s.center = mu.center_of_mass();
  double d2 = 0.0;
  for (int i = 0; i < mu.size(); ++i) d2 += mu.masses[i] * dist2(mu.positions[i], s.center);
  s.distance = std::sqrt(std::max(0.0, d2));
  return s;
}

double evi_kappa(const Potential& W, const Potential& V, const Domain& domain) {
  const double base = 0.5 * std::min(W.lambda(), 0.0) + 0.5 * V.lambda();
  if (domain.eta() == kInf) return base;
  const double sup_w = grad_sup_on_difference_set(W, domain);
  const double sup_v = V.grad_sup_bound(domain.circumradius());
  return base - (sup_w + sup_v) / (2.0 * domain.eta());
}

double evi_residual(const ParticleMeasure& mu_t, const ParticleMeasure& mu_next,
                    double h, const ParticleMeasure& nu, double kappa_evi,
                    const Potential& W, const Potential& V, double t) {
  const double d2_now = [&] {
    const double d = wasserstein2(mu_t, nu).distance;
    return d * d;
  }();
  const double d2_next = [&] {
    const double d = wasserstein2(mu_next, nu).distance;
    return d * d;
  }();
  const double derivative_half = 0.5 * (d2_next - d2_now) / h;
  return derivative_half + kappa_evi * d2_now - (energy(nu, W, V, t) - energy(mu_t, W, V, t));
}

double fit_decay_rate(const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 3) throw Error("fit_decay_rate: needs at least 3 samples");
  double st = 0.0, sl = 0.0, stt = 0.0, stl = 0.0;
  const double n = static_cast<double>(series.size());
  for (const auto& [t, value] : series) {
    if (!(value > 0.0))
      throw NonPositiveValue("fit_decay_rate: values must be positive");
    const double l = std::log(value);
    st += t;
    sl += l;
    stt += t * t;
    stl += t * l;
  }
  const double denom = n * stt - st * st;
  if (std::abs(denom) < 1e-300) throw Error("fit_decay_rate: degenerate time samples");
  return (n * stl - st * sl) / denom;
}

}  // namespace proxflow
