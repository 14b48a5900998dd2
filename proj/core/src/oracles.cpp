#include "advrisk/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace advrisk {

EmpiricalMeasure GridMeasure::to_empirical() const {
  std::vector<double> flat = points;
  return EmpiricalMeasure(std::move(flat), 1, weights);
}

namespace oracles {

std::pair<double, std::vector<std::size_t>> exhaustive_min_assignment(
    const std::vector<std::vector<double>>& cost) {
  std::size_t n = cost.size();
  if (n == 0 || n > 8) {
    throw std::invalid_argument("exhaustive_min_assignment: need 1 <= n <= 8");
  }
  for (const auto& row : cost) {
    if (row.size() != n) {
      throw std::invalid_argument("exhaustive_min_assignment: cost not square");
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best = perm;
  double best_value = std::numeric_limits<double>::infinity();
  do {
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) v += cost[i][perm[i]];
    if (v < best_value) {  // strict: first (lexicographic) minimum wins
      best_value = v;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best_value, best};
}

double small_transport_lp(std::span<const double> mu_w, std::span<const double> nu_w,
                          const std::vector<std::vector<double>>& cost) {
  const std::size_t n = mu_w.size();
  const std::size_t m = nu_w.size();
  if (n == 0 || m == 0 || n > 64 || m > 64) {
    throw std::invalid_argument("small_transport_lp: supports must have 1..64 atoms");
  }
  if (cost.size() != n) {
    throw std::invalid_argument("small_transport_lp: cost rows != |mu|");
  }
  for (const auto& row : cost) {
    if (row.size() != m) {
      throw std::invalid_argument("small_transport_lp: cost cols != |nu|");
    }
    for (double c : row) {
      if (!(c >= 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("small_transport_lp: costs must be >= 0");
      }
    }
  }
  double total_mu = std::accumulate(mu_w.begin(), mu_w.end(), 0.0);
  double total_nu = std::accumulate(nu_w.begin(), nu_w.end(), 0.0);
  if (std::abs(total_mu - total_nu) > 1e-9) {
    throw std::invalid_argument("small_transport_lp: marginal masses differ");
  }

  // Successive shortest paths with Dijkstra on reduced costs. Node layout:
  // 0 = source, 1..n = mu atoms, n+1..n+m = nu atoms, n+m+1 = sink.
  const std::size_t N = n + m + 2;
  const std::size_t S = 0, T = n + m + 1;
  struct Edge {
    std::size_t to;
    std::size_t rev;
    double cap;
    double cost;
  };
  std::vector<std::vector<Edge>> g(N);
  auto add_edge = [&g](std::size_t a, std::size_t b, double cap, double c) {
    g[a].push_back({b, g[b].size(), cap, c});
    g[b].push_back({a, g[a].size() - 1, 0.0, -c});
  };
  for (std::size_t i = 0; i < n; ++i) add_edge(S, 1 + i, mu_w[i], 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      add_edge(1 + i, 1 + n + j, std::numeric_limits<double>::infinity(),
               cost[i][j]);
    }
  }
  for (std::size_t j = 0; j < m; ++j) add_edge(1 + n + j, T, nu_w[j], 0.0);

  constexpr double kFlowTol = 1e-12;
  const double target = std::min(total_mu, total_nu);
  double shipped = 0.0;
  double value = 0.0;
  std::vector<double> potential(N, 0.0);  // costs >= 0, so 0 is feasible
  std::vector<double> dist(N);
  std::vector<std::size_t> prev_node(N), prev_edge(N);

  while (shipped + kFlowTol < target) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    dist[S] = 0.0;
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0.0, S});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u] + kFlowTol) continue;
      for (std::size_t e = 0; e < g[u].size(); ++e) {
        const Edge& ed = g[u][e];
        if (ed.cap <= kFlowTol) continue;
        double nd = d + ed.cost + potential[u] - potential[ed.to];
        if (nd < dist[ed.to] - kFlowTol) {
          dist[ed.to] = nd;
          prev_node[ed.to] = u;
          prev_edge[ed.to] = e;
          pq.push({nd, ed.to});
        }
      }
    }
    if (!std::isfinite(dist[T])) break;
    for (std::size_t v = 0; v < N; ++v) {
      if (std::isfinite(dist[v])) potential[v] += dist[v];
    }
    double push = target - shipped;
    for (std::size_t v = T; v != S; v = prev_node[v]) {
      push = std::min(push, g[prev_node[v]][prev_edge[v]].cap);
    }
    for (std::size_t v = T; v != S; v = prev_node[v]) {
      Edge& ed = g[prev_node[v]][prev_edge[v]];
      ed.cap -= push;
      g[v][ed.rev].cap += push;
      value += push * ed.cost;
    }
    shipped += push;
  }
  return value;
}

namespace {

GridMeasure midpoint_grid(const UnivariateFamily& f, double lo, double hi,
                          std::size_t n) {
  double h = (hi - lo) / static_cast<double>(n);
  GridMeasure g;
  g.points.resize(n);
  g.weights.resize(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double x = lo + (static_cast<double>(i) + 0.5) * h;
    g.points[i] = x;
    g.weights[i] = f.pdf(x) * h;
    sum += g.weights[i];
  }
  for (double& w : g.weights) w /= sum;
  return g;
}

std::pair<double, double> quantile_range(const UnivariateFamily& f, double coverage) {
  double lo = f.quantile((1.0 - coverage) / 2.0);
  double hi = f.quantile((1.0 + coverage) / 2.0);
  if (!std::isfinite(lo)) lo = f.support_lo();
  if (!std::isfinite(hi)) hi = f.support_hi();
  return {lo, hi};
}

void check_grid_args(std::size_t n, double coverage) {
  if (n < 3) throw std::invalid_argument("discretize: need n >= 3");
  if (!(coverage > 0.0) || coverage > 1.0) {
    throw std::invalid_argument("discretize: coverage in (0, 1]");
  }
}

}  // namespace

GridMeasure discretize(const UnivariateFamily& f, std::size_t n, double coverage) {
  check_grid_args(n, coverage);
  auto [lo, hi] = quantile_range(f, coverage);
  return midpoint_grid(f, lo, hi, n);
}

std::pair<GridMeasure, GridMeasure> discretize_common(const UnivariateFamily& f,
                                                      const UnivariateFamily& g,
                                                      std::size_t n, double coverage) {
  check_grid_args(n, coverage);
  auto [flo, fhi] = quantile_range(f, coverage);
  auto [glo, ghi] = quantile_range(g, coverage);
  double lo = std::min(flo, glo), hi = std::max(fhi, ghi);
  return {midpoint_grid(f, lo, hi, n), midpoint_grid(g, lo, hi, n)};
}

}  // namespace oracles
}  // namespace advrisk
