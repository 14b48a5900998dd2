#include "advrisk/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "advrisk/oracles.hpp"
#include "advrisk/special.hpp"

namespace advrisk {

namespace {

constexpr double kMassTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_pair(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu) {
  if (mu.empty() || nu.empty()) {
    throw std::invalid_argument("depsilon: empty measure");
  }
  if (mu.dim() != nu.dim()) {
    throw std::invalid_argument("depsilon: dimension mismatch");
  }
  if (!mu.is_probability(1e-9) || !nu.is_probability(1e-9)) {
    throw std::invalid_argument(
        "depsilon: inputs must be probability measures (mass 1 within 1e-9)");
  }
}

// Admissible nu indices for each mu atom, ascending. The band prefilter on
// coordinate 0 is a necessary condition for both metrics, so the edge set is
// identical with and without it.
std::vector<std::vector<std::size_t>> admissible_adjacency(
    const EmpiricalMeasure& mu, const EmpiricalMeasure& nu, Metric metric,
    double two_eps, bool use_prefilter) {
  const std::size_t n = mu.size(), m = nu.size();
  std::vector<std::vector<std::size_t>> adj(n);
  if (use_prefilter) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&nu](std::size_t a, std::size_t b) {
      double ya = nu.coord(a, 0), yb = nu.coord(b, 0);
      return ya < yb || (ya == yb && a < b);
    });
    std::vector<double> y0(m);
    for (std::size_t r = 0; r < m; ++r) y0[r] = nu.coord(order[r], 0);
    for (std::size_t i = 0; i < n; ++i) {
      double x0 = mu.coord(i, 0);
      auto lo = std::lower_bound(y0.begin(), y0.end(), x0 - two_eps);
      // x0 - two_eps rounds, so step back to the exact band predicate
      while (lo != y0.begin() && x0 - *(lo - 1) <= two_eps) --lo;
      for (auto it = lo; it != y0.end() && *it - x0 <= two_eps; ++it) {
        std::size_t j = order[static_cast<std::size_t>(it - y0.begin())];
        if (within(metric, mu.point(i), nu.point(j), two_eps)) {
          adj[i].push_back(j);
        }
      }
      std::sort(adj[i].begin(), adj[i].end());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (within(metric, mu.point(i), nu.point(j), two_eps)) {
          adj[i].push_back(j);
        }
      }
    }
  }
  return adj;
}

struct EngineResult {
  std::vector<CouplingEntry> admissible;  // transported at distance <= 2 eps
  std::vector<double> sent;               // per mu atom
  std::vector<double> received;           // per nu atom
};

// 1-D sweep: serve nu atoms left to right from the admissible mu atom that
// expires first (smallest position). Exchange-optimal for interval
// admissibility; agrees exactly with the flow engines.
EngineResult solve_sweep_1d(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                            double two_eps) {
  const std::size_t n = mu.size(), m = nu.size();
  EngineResult res;
  res.sent.assign(n, 0.0);
  res.received.assign(m, 0.0);

  std::vector<std::size_t> mu_order(n), nu_order(m);
  std::iota(mu_order.begin(), mu_order.end(), 0);
  std::iota(nu_order.begin(), nu_order.end(), 0);
  auto by_coord = [](const EmpiricalMeasure& e) {
    return [&e](std::size_t a, std::size_t b) {
      double xa = e.coord(a, 0), xb = e.coord(b, 0);
      return xa < xb || (xa == xb && a < b);
    };
  };
  std::sort(mu_order.begin(), mu_order.end(), by_coord(mu));
  std::sort(nu_order.begin(), nu_order.end(), by_coord(nu));

  struct Supply {
    double x;
    std::size_t idx;
    bool operator>(const Supply& o) const {
      return x > o.x || (x == o.x && idx > o.idx);
    }
  };
  std::priority_queue<Supply, std::vector<Supply>, std::greater<Supply>> active;
  std::vector<double> rem(n, 0.0);
  std::size_t next = 0;

  for (std::size_t jj = 0; jj < m; ++jj) {
    std::size_t j = nu_order[jj];
    double y = nu.coord(j, 0);
    while (next < n) {
      std::size_t i = mu_order[next];
      if (mu.coord(i, 0) - y > two_eps) break;
      rem[i] = mu.weight(i);
      active.push({mu.coord(i, 0), i});
      ++next;
    }
    double need = nu.weight(j);
    while (need > kMassTol && !active.empty()) {
      Supply top = active.top();
      if (y - top.x > two_eps) {  // expired, mass stranded
        active.pop();
        continue;
      }
      double take = std::min(need, rem[top.idx]);
      if (take > kMassTol) {
        res.admissible.push_back({top.idx, j, take, true});
        res.sent[top.idx] += take;
        res.received[j] += take;
        need -= take;
      }
      rem[top.idx] -= take;
      if (rem[top.idx] <= kMassTol) active.pop();
    }
  }
  return res;
}

// Hopcroft-Karp maximum matching for uniform, equal-count inputs.
EngineResult solve_matching(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                            const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = mu.size(), m = nu.size();
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_l(n, kFree), match_r(m, kFree);
  std::vector<int> dist(n);

  auto bfs = [&]() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (match_l[i] == kFree) {
        dist[i] = 0;
        q.push(i);
      } else {
        dist[i] = -1;
      }
    }
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      for (std::size_t j : adj[i]) {
        std::size_t k = match_r[j];
        if (k == kFree) {
          found = true;
        } else if (dist[k] == -1) {
          dist[k] = dist[i] + 1;
          q.push(k);
        }
      }
    }
    return found;
  };
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) {
    for (std::size_t j : adj[i]) {
      std::size_t k = match_r[j];
      if (k == kFree || (dist[k] == dist[i] + 1 && dfs(k))) {
        match_l[i] = j;
        match_r[j] = i;
        return true;
      }
    }
    dist[i] = -1;
    return false;
  };
  while (bfs()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (match_l[i] == kFree) dfs(i);
    }
  }

  EngineResult res;
  res.sent.assign(n, 0.0);
  res.received.assign(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (match_l[i] != kFree) {
      double w = mu.weight(i);
      res.admissible.push_back({i, match_l[i], w, true});
      res.sent[i] = w;
      res.received[match_l[i]] = w;
    }
  }
  return res;
}

// Dinic max-flow with real capacities for general weights.
class Dinic {
 public:
  explicit Dinic(std::size_t nodes) : g_(nodes), level_(nodes), ptr_(nodes) {}

  void add_edge(std::size_t a, std::size_t b, double cap) {
    g_[a].push_back({b, g_[b].size(), cap});
    g_[b].push_back({a, g_[a].size() - 1, 0.0});
  }

  double max_flow(std::size_t s, std::size_t t) {
    double flow = 0.0;
    while (bfs(s, t)) {
      std::fill(ptr_.begin(), ptr_.end(), 0);
      while (double pushed = dfs(s, t, kInf)) {
        flow += pushed;
        if (pushed <= kMassTol) break;
      }
    }
    return flow;
  }

  double edge_flow(std::size_t a, std::size_t edge_index) const {
    const Edge& e = g_[a][edge_index];
    return g_[e.to][e.rev].cap;  // reverse capacity accumulates pushed flow
  }

  struct Edge {
    std::size_t to;
    std::size_t rev;
    double cap;
  };
  const std::vector<Edge>& adjacency(std::size_t a) const { return g_[a]; }

 private:
  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (const Edge& e : g_[u]) {
        if (e.cap > kMassTol && level_[e.to] == -1) {
          level_[e.to] = level_[u] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[t] != -1;
  }

  double dfs(std::size_t u, std::size_t t, double pushed) {
    if (u == t || pushed <= kMassTol) return pushed;
    for (std::size_t& i = ptr_[u]; i < g_[u].size(); ++i) {
      Edge& e = g_[u][i];
      if (e.cap <= kMassTol || level_[e.to] != level_[u] + 1) continue;
      double got = dfs(e.to, t, std::min(pushed, e.cap));
      if (got > kMassTol) {
        e.cap -= got;
        g_[e.to][e.rev].cap += got;
        return got;
      }
    }
    return 0.0;
  }

  std::vector<std::vector<Edge>> g_;
  std::vector<int> level_;
  std::vector<std::size_t> ptr_;
};

EngineResult solve_flow(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                        const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = mu.size(), m = nu.size();
  const std::size_t S = 0, T = n + m + 1;
  Dinic dinic(n + m + 2);
  for (std::size_t i = 0; i < n; ++i) dinic.add_edge(S, 1 + i, mu.weight(i));
  std::vector<std::vector<std::size_t>> middle_edge_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : adj[i]) {
      middle_edge_index[i].push_back(dinic.adjacency(1 + i).size());
      dinic.add_edge(1 + i, 1 + n + j, 2.0);  // > total mass, effectively unbounded
    }
  }
  for (std::size_t j = 0; j < m; ++j) dinic.add_edge(1 + n + j, T, nu.weight(j));
  dinic.max_flow(S, T);

  EngineResult res;
  res.sent.assign(n, 0.0);
  res.received.assign(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < adj[i].size(); ++k) {
      double f = dinic.edge_flow(1 + i, middle_edge_index[i][k]);
      if (f > kMassTol) {
        std::size_t j = adj[i][k];
        res.admissible.push_back({i, j, f, true});
        res.sent[i] += f;
        res.received[j] += f;
      }
    }
  }
  return res;
}

// Dual witness for 1-D instances: the mu atoms reachable from unmet supply in
// the residual graph form a set S with mu(S) - nu(S^{2 eps}) = cost; the
// witness is S^eps as an interval set (with an ulp-level inflation so that
// interval thinning keeps the atoms of S inside).
IntervalSet extract_witness_1d(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                               double two_eps, const EngineResult& er) {
  const std::size_t n = mu.size(), m = nu.size();

  std::vector<std::size_t> nu_order(m);
  std::iota(nu_order.begin(), nu_order.end(), 0);
  std::sort(nu_order.begin(), nu_order.end(), [&nu](std::size_t a, std::size_t b) {
    double ya = nu.coord(a, 0), yb = nu.coord(b, 0);
    return ya < yb || (ya == yb && a < b);
  });
  std::vector<double> y_sorted(m);
  for (std::size_t r = 0; r < m; ++r) y_sorted[r] = nu.coord(nu_order[r], 0);

  std::vector<std::vector<std::pair<std::size_t, double>>> inbound(m);
  for (const auto& c : er.admissible) inbound[c.to].push_back({c.from, c.mass});

  std::vector<bool> vis_mu(n, false), vis_nu(m, false);
  // next unvisited slot in the sorted nu array, with path compression
  std::vector<std::size_t> skip(m + 1);
  std::iota(skip.begin(), skip.end(), 0);
  std::function<std::size_t(std::size_t)> next_free = [&](std::size_t r) {
    while (skip[r] != r) r = skip[r] = skip[skip[r]];
    return r;
  };

  std::queue<std::size_t> q_mu, q_nu;
  for (std::size_t i = 0; i < n; ++i) {
    if (mu.weight(i) - er.sent[i] > kMassTol) {
      vis_mu[i] = true;
      q_mu.push(i);
    }
  }
  while (!q_mu.empty() || !q_nu.empty()) {
    if (!q_mu.empty()) {
      std::size_t i = q_mu.front();
      q_mu.pop();
      double x = mu.coord(i, 0);
      std::size_t r = static_cast<std::size_t>(
          std::lower_bound(y_sorted.begin(), y_sorted.end(), x - two_eps) -
          y_sorted.begin());
      for (r = next_free(r); r < m && y_sorted[r] - x <= two_eps;
           r = next_free(r + 1)) {
        std::size_t j = nu_order[r];
        vis_nu[j] = true;
        skip[r] = r + 1;
        q_nu.push(j);
      }
    } else {
      std::size_t j = q_nu.front();
      q_nu.pop();
      for (const auto& [i, mass] : inbound[j]) {
        if (!vis_mu[i] && mass > kMassTol) {
          vis_mu[i] = true;
          q_mu.push(i);
        }
      }
    }
  }

  double eps = 0.5 * two_eps;
  std::vector<Interval> balls;
  for (std::size_t i = 0; i < n; ++i) {
    if (!vis_mu[i]) continue;
    double x = mu.coord(i, 0);
    double slack =
        4.0 * std::numeric_limits<double>::epsilon() * std::max({std::abs(x), eps, 1.0});
    balls.push_back({x - eps - slack, x + eps + slack});
  }
  return IntervalSet(std::move(balls));
}

}  // namespace

double TransportCertificate::transported_admissible() const {
  double s = 0.0;
  for (const auto& c : coupling) {
    if (c.admissible) s += c.mass;
  }
  return s;
}

double TransportCertificate::marginal_error(const EmpiricalMeasure& mu,
                                            const EmpiricalMeasure& nu) const {
  std::vector<double> out(mu.size(), 0.0), in(nu.size(), 0.0);
  for (const auto& c : coupling) {
    out[c.from] += c.mass;
    in[c.to] += c.mass;
  }
  double err = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    err = std::max(err, std::abs(out[i] - mu.weight(i)));
  }
  for (std::size_t j = 0; j < nu.size(); ++j) {
    err = std::max(err, std::abs(in[j] - nu.weight(j)));
  }
  return err;
}

TransportCertificate depsilon_exact(const EmpiricalMeasure& mu,
                                    const EmpiricalMeasure& nu, Metric metric,
                                    double eps, const DepsilonOptions& opts) {
  if (!(eps >= 0.0)) throw std::invalid_argument("depsilon: eps must be >= 0");
  validate_pair(mu, nu);
  const double two_eps = 2.0 * eps;
  const std::size_t n = mu.size(), m = nu.size();

  EngineResult er;
  if (mu.dim() == 1 && !opts.force_flow) {
    er = solve_sweep_1d(mu, nu, two_eps);
  } else {
    auto adj = admissible_adjacency(mu, nu, metric, two_eps, opts.use_prefilter);
    bool uniform = n == m && mu.uniform_weights() && nu.uniform_weights() &&
                   mu.weight(0) == nu.weight(0);
    er = uniform ? solve_matching(mu, nu, adj) : solve_flow(mu, nu, adj);
  }

  TransportCertificate cert;
  cert.eps = eps;
  cert.metric = metric;
  cert.coupling = std::move(er.admissible);

  // Complete the coupling: pair residual supply with residual demand in index
  // order. Optimality of the engine guarantees every such pair is farther
  // than 2 eps.
  double leftover = 0.0;
  {
    std::size_t i = 0, j = 0;
    double a = 0.0, b = 0.0;
    auto next_supply = [&]() {
      while (i < n) {
        a = mu.weight(i) - er.sent[i];
        if (a > kMassTol) return true;
        ++i;
      }
      return false;
    };
    auto next_demand = [&]() {
      while (j < m) {
        b = nu.weight(j) - er.received[j];
        if (b > kMassTol) return true;
        ++j;
      }
      return false;
    };
    while (next_supply() && next_demand()) {
      double mass = std::min(a, b);
      bool adm = within(metric, mu.point(i), nu.point(j), two_eps);
      cert.coupling.push_back({i, j, mass, adm});
      er.sent[i] += mass;
      er.received[j] += mass;
      leftover += mass;
    }
  }
  cert.cost = std::clamp(leftover / mu.total_mass(), 0.0, 1.0);

  if (opts.compute_witness && mu.dim() == 1) {
    // Recompute residuals of admissible transport only (the completion above
    // mutated `sent`); rebuild from the coupling.
    EngineResult view;
    view.sent.assign(n, 0.0);
    view.received.assign(m, 0.0);
    for (const auto& c : cert.coupling) {
      if (c.admissible) {
        view.sent[c.from] += c.mass;
        view.received[c.to] += c.mass;
      }
    }
    view.admissible = cert.coupling;  // inbound uses admissible entries only
    view.admissible.erase(
        std::remove_if(view.admissible.begin(), view.admissible.end(),
                       [](const CouplingEntry& c) { return !c.admissible; }),
        view.admissible.end());
    cert.witness = extract_witness_1d(mu, nu, two_eps, view);
  }
  return cert;
}

double risk_from_depsilon(double cost) {
  if (!(cost >= -1e-12) || cost > 1.0 + 1e-12) {
    throw std::invalid_argument("risk_from_depsilon: cost outside [0, 1]");
  }
  return (1.0 - std::clamp(cost, 0.0, 1.0)) / 2.0;
}

double wasserstein_p(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                     Metric metric, double p, std::size_t multi_d_cap) {
  if (!(p >= 1.0)) throw std::invalid_argument("wasserstein_p: need p >= 1");
  validate_pair(mu, nu);
  const std::size_t n = mu.size(), m = nu.size();

  if (mu.dim() == 1) {
    std::vector<std::size_t> mo(n), no(m);
    std::iota(mo.begin(), mo.end(), 0);
    std::iota(no.begin(), no.end(), 0);
    std::sort(mo.begin(), mo.end(), [&mu](std::size_t a, std::size_t b) {
      return mu.coord(a, 0) < mu.coord(b, 0);
    });
    std::sort(no.begin(), no.end(), [&nu](std::size_t a, std::size_t b) {
      return nu.coord(a, 0) < nu.coord(b, 0);
    });
    double cost = 0.0;
    std::size_t i = 0, j = 0;
    double a = mu.weight(mo[0]), b = nu.weight(no[0]);
    while (i < n && j < m) {
      double mass = std::min(a, b);
      if (mass > 0.0) {
        cost += mass * std::pow(std::abs(mu.coord(mo[i], 0) - nu.coord(no[j], 0)), p);
      }
      a -= mass;
      b -= mass;
      if (a <= kMassTol) {
        if (++i < n) a = mu.weight(mo[i]);
      }
      if (b <= kMassTol) {
        if (++j < m) b = nu.weight(no[j]);
      }
    }
    return std::pow(cost, 1.0 / p);
  }

  if (n > multi_d_cap || m > multi_d_cap) {
    throw std::invalid_argument(
        "wasserstein_p: multi-dimensional inputs exceed the exact-solve cap");
  }
  std::vector<std::vector<double>> cost(n, std::vector<double>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cost[i][j] = std::pow(distance(metric, mu.point(i), nu.point(j)), p);
    }
  }
  double v = oracles::small_transport_lp(mu.weights(), nu.weights(), cost);
  return std::pow(v, 1.0 / p);
}

double wp_lower_bound(double wp, double eps, double p) {
  if (!(eps > 0.0)) throw std::invalid_argument("wp_lower_bound: eps must be > 0");
  if (!(p >= 1.0)) throw std::invalid_argument("wp_lower_bound: need p >= 1");
  if (!(wp >= 0.0)) throw std::invalid_argument("wp_lower_bound: wp must be >= 0");
  double ratio = std::pow(wp / (2.0 * eps), p);
  return std::max(0.0, 0.5 * (1.0 - ratio));
}

double strassen_gap(const UnivariateFamily& mu, const UnivariateFamily& nu,
                    const IntervalSet& A, double eps) {
  return A.thin(eps).mass(mu) - A.expand(eps).mass(nu);
}

double strassen_gap(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                    const IntervalSet& A, double eps) {
  if (mu.dim() != 1 || nu.dim() != 1) {
    throw std::invalid_argument("strassen_gap: interval witness requires 1-D data");
  }
  return A.thin(eps).empirical_mass(mu) - A.expand(eps).empirical_mass(nu);
}

namespace {
double dual_norm(Metric metric, std::span<const double> w) {
  double s = 0.0;
  if (metric == Metric::euclidean) {
    for (double v : w) s += v * v;
    return std::sqrt(s);
  }
  for (double v : w) s += std::abs(v);  // dual of l_inf is l_1
  return s;
}
}  // namespace

double halfspace_mass(const IsoGaussian& g, const Halfspace& h) {
  if (h.is_constant()) return h.offset <= 0.0 ? 1.0 : 0.0;
  if (g.dim() != h.normal.size()) {
    throw std::invalid_argument("halfspace_mass: dimension mismatch");
  }
  double norm = dual_norm(Metric::euclidean, h.normal);
  double mean = 0.0;
  for (std::size_t k = 0; k < g.dim(); ++k) mean += h.normal[k] * g.mu[k];
  // normal . X ~ N(mean, (sigma * norm)^2)
  return q_tail((h.offset - mean) / (g.sigma * norm));
}

double halfspace_mass(const EmpiricalMeasure& m, const Halfspace& h) {
  if (h.is_constant()) return h.offset <= 0.0 ? m.total_mass() : 0.0;
  if (m.dim() != h.normal.size()) {
    throw std::invalid_argument("halfspace_mass: dimension mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double dot = 0.0;
    auto x = m.point(i);
    for (std::size_t k = 0; k < x.size(); ++k) dot += h.normal[k] * x[k];
    if (dot >= h.offset) total += m.weight(i);
  }
  return total;
}

double strassen_gap(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                    const Halfspace& A, Metric metric, double eps) {
  if (A.is_constant()) {
    return halfspace_mass(mu, A) - halfspace_mass(nu, A);
  }
  double shift = eps * dual_norm(metric, A.normal);
  Halfspace thinned{A.normal, A.offset + shift};
  Halfspace expanded{A.normal, A.offset - shift};
  return halfspace_mass(mu, thinned) - halfspace_mass(nu, expanded);
}

double strassen_gap(const IsoGaussian& mu, const IsoGaussian& nu, const Halfspace& A,
                    double eps) {
  if (A.is_constant()) {
    return halfspace_mass(mu, A) - halfspace_mass(nu, A);
  }
  double shift = eps * dual_norm(Metric::euclidean, A.normal);
  Halfspace thinned{A.normal, A.offset + shift};
  Halfspace expanded{A.normal, A.offset - shift};
  return halfspace_mass(mu, thinned) - halfspace_mass(nu, expanded);
}

}  // namespace advrisk
