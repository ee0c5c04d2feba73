#include "lkev/flat_distance.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace lkev {

namespace {

int nearest_angle_node(double theta, const CylinderGrid& g) {
  const double u = theta / g.dtheta();
  int j = static_cast<int>(std::lround(u)) % g.n_theta;
  if (j < 0) j += g.n_theta;
  return j;
}

void deposit(std::vector<double>& bins, const CylinderGrid& g, double t0, double t1,
             int j_theta, double mass_per_time) {
  // spread over time cells by overlap length
  const double dt = g.dt();
  int i0 = std::max(0, static_cast<int>(std::floor(t0 / dt)));
  int i1 = std::min(g.n_t - 1, static_cast<int>(std::floor((t1 - 1e-15) / dt)));
  for (int i = i0; i <= i1; ++i) {
    const double ov = std::min(t1, (i + 1) * dt) - std::max(t0, i * dt);
    if (ov > 0.0) bins[g.index(i, j_theta)] += mass_per_time * ov;
  }
}

// Min-cost flow by successive shortest paths with Dijkstra + potentials.
// Real-valued supplies; no capacities. Nodes: grid + one ground node whose
// unit-cost edges realize the |f| <= 1 constraint of the flat norm.
class FlatNormSolver {
 public:
  explicit FlatNormSolver(const CylinderGrid& g) : g_(g), n_nodes_(g.size() + 1) {
    adj_.resize(n_nodes_);
    const double dth = g.dtheta(), dt = g.dt();
    for (int i = 0; i < g.n_t; ++i) {
      for (int j = 0; j < g.n_theta; ++j) {
        const int u = static_cast<int>(g.index(i, j));
        if (g.n_theta > 1) add_edge(u, static_cast<int>(g.index(i, (j + 1) % g.n_theta)), dth);
        if (i + 1 < g.n_t) add_edge(u, static_cast<int>(g.index(i + 1, j)), dt);
        add_edge(u, ground(), 1.0);
      }
    }
  }

  int ground() const { return static_cast<int>(n_nodes_) - 1; }

  double solve(std::vector<double> supply) {
    double total = 0.0;
    supply.push_back(0.0);
    for (std::size_t v = 0; v + 1 < n_nodes_; ++v) supply.back() -= supply[v];

    double scale = 0.0;
    for (double s : supply) scale = std::max(scale, std::abs(s));
    const double eps = std::max(1e-14 * scale, 1e-300);

    std::vector<double> pot(n_nodes_, 0.0);
    while (true) {
      int src = -1;
      for (std::size_t v = 0; v < n_nodes_; ++v)
        if (supply[v] > eps) { src = static_cast<int>(v); break; }
      if (src < 0) break;

      dijkstra(src, pot);
      // pick the nearest deficit node
      int dst = -1;
      double best = kInf;
      for (std::size_t v = 0; v < n_nodes_; ++v)
        if (supply[v] < -eps && dist_[v] < best) { best = dist_[v]; dst = static_cast<int>(v); }
      if (dst < 0) throw std::runtime_error("flat_distance: internal error, no sink reachable");

      double amount = std::min(supply[src], -supply[dst]);
      supply[src] -= amount;
      supply[dst] += amount;
      total += amount * best;
      for (std::size_t v = 0; v < n_nodes_; ++v)
        if (std::isfinite(dist_[v])) pot[v] += dist_[v];
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    double cost;
  };

  void add_edge(int u, int v, double cost) {
    adj_[u].push_back({v, cost});
    adj_[v].push_back({u, cost});
  }

  void dijkstra(int src, const std::vector<double>& pot) {
    dist_.assign(n_nodes_, kInf);
    dist_[src] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0.0, src);
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist_[u] + 1e-18) continue;
      for (const Edge& e : adj_[u]) {
        const double nd = d + e.cost + pot[u] - pot[e.to];
        if (nd < dist_[e.to] - 1e-18) {
          dist_[e.to] = nd;
          pq.emplace(nd, e.to);
        }
      }
    }
  }

  CylinderGrid g_;
  std::size_t n_nodes_;
  std::vector<std::vector<Edge>> adj_;
  std::vector<double> dist_;
};

}  // namespace

std::vector<double> bin_measure(const DrivingMeasure& mu, const CylinderGrid& grid) {
  require(std::abs(mu.T - grid.T) <= 1e-9 * std::max(1.0, grid.T),
          "bin_measure: grid horizon must match the measure");
  std::vector<double> bins(grid.size(), 0.0);
  for (const MeasureSlice& s : mu.slices) {
    if (s.is_density()) {
      const auto& v = s.density().values;
      const double dth = s.density().dtheta();
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0.0) continue;
        const int node = nearest_angle_node(static_cast<double>(j) * dth, grid);
        deposit(bins, grid, s.t0, s.t1, node, v[j] * dth);
      }
    } else {
      for (const auto& [theta, w] : s.atoms().atoms)
        deposit(bins, grid, s.t0, s.t1, nearest_angle_node(theta, grid), w);
    }
  }
  return bins;
}

double flat_distance_binned(const std::vector<double>& a, const std::vector<double>& b,
                            const CylinderGrid& grid) {
  require(a.size() == grid.size() && b.size() == grid.size(),
          "flat_distance_binned: bin arrays must match the grid");
  std::vector<double> supply(grid.size());
  for (std::size_t i = 0; i < supply.size(); ++i) supply[i] = a[i] - b[i];
  FlatNormSolver solver(grid);
  return solver.solve(std::move(supply));
}

double flat_distance(const DrivingMeasure& mu1, const DrivingMeasure& mu2,
                     const CylinderGrid& grid) {
  return flat_distance_binned(bin_measure(mu1, grid), bin_measure(mu2, grid), grid);
}

}  // namespace lkev
