#include "advrisk/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "advrisk/analytic.hpp"
#include "advrisk/discrete.hpp"
#include "advrisk/intervals.hpp"
#include "advrisk/measures.hpp"
#include "advrisk/oracles.hpp"

namespace advrisk {

namespace {

EmpiricalMeasure random_cloud(std::mt19937_64& rng, std::size_t n, std::size_t d,
                              double spread) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<double> flat(n * d);
  for (double& v : flat) v = u(rng);
  return EmpiricalMeasure::uniform(std::move(flat), d);
}

EmpiricalMeasure random_weighted_cloud(std::mt19937_64& rng, std::size_t n,
                                       std::size_t d, double spread) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::uniform_real_distribution<double> uw(0.1, 1.0);
  std::vector<double> flat(n * d);
  for (double& v : flat) v = u(rng);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& v : w) {
    v = uw(rng);
    total += v;
  }
  for (double& v : w) v /= total;
  return EmpiricalMeasure(std::move(flat), d, std::move(w));
}

struct CheckRunner {
  std::ostream& out;
  bool all_ok = true;

  void check(const char* name, bool ok) {
    out << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    all_ok = all_ok && ok;
  }
};

}  // namespace

bool run_verification(std::ostream& out) {
  CheckRunner run{out};
  std::mt19937_64 rng(20240617);

  // Solver vs exhaustive assignment on uniform instances.
  {
    bool ok = true;
    std::uniform_real_distribution<double> ueps(0.05, 1.5);
    for (int it = 0; it < 100 && ok; ++it) {
      std::size_t n = 2 + it % 5;
      auto mu = random_cloud(rng, n, 2, 1.0);
      auto nu = random_cloud(rng, n, 2, 1.0);
      double eps = ueps(rng);
      Metric metric = it % 2 ? Metric::chebyshev : Metric::euclidean;
      auto cert = depsilon_exact(mu, nu, metric, eps);
      std::vector<std::vector<double>> cost(n, std::vector<double>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          cost[i][j] =
              within(metric, mu.point(i), nu.point(j), 2.0 * eps) ? 0.0 : 1.0;
        }
      }
      auto [best, perm] = oracles::exhaustive_min_assignment(cost);
      ok = std::abs(cert.cost - best / static_cast<double>(n)) <= 1e-9;
    }
    run.check("flow == exhaustive assignment (100 uniform instances)", ok);
  }

  // Flow vs exact transport LP on weighted instances.
  {
    bool ok = true;
    std::uniform_real_distribution<double> ueps(0.05, 1.5);
    for (int it = 0; it < 50 && ok; ++it) {
      std::size_t n = 2 + it % 6, m = 2 + (it / 2) % 6;
      auto mu = random_weighted_cloud(rng, n, 2, 1.0);
      auto nu = random_weighted_cloud(rng, m, 2, 1.0);
      double eps = ueps(rng);
      auto cert = depsilon_exact(mu, nu, Metric::euclidean, eps);
      std::vector<std::vector<double>> cost(n, std::vector<double>(m));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          cost[i][j] = within(Metric::euclidean, mu.point(i), nu.point(j), 2.0 * eps)
                           ? 0.0
                           : 1.0;
        }
      }
      double lp = oracles::small_transport_lp(mu.weights(), nu.weights(), cost);
      ok = std::abs(cert.cost - lp) <= 1e-9;
    }
    run.check("flow == exact transport LP (50 weighted instances)", ok);
  }

  // 1-D sweep engine vs flow engine.
  {
    bool ok = true;
    std::uniform_real_distribution<double> ueps(0.01, 1.0);
    for (int it = 0; it < 100 && ok; ++it) {
      std::size_t n = 2 + it % 8, m = 2 + (it / 3) % 8;
      auto mu = random_weighted_cloud(rng, n, 1, 2.0);
      auto nu = random_weighted_cloud(rng, m, 1, 2.0);
      double eps = ueps(rng);
      auto fast = depsilon_exact(mu, nu, Metric::euclidean, eps);
      DepsilonOptions opts;
      opts.force_flow = true;
      auto flow = depsilon_exact(mu, nu, Metric::euclidean, eps, opts);
      ok = std::abs(fast.cost - flow.cost) <= 1e-9;
    }
    run.check("1-D sweep == flow engine (100 weighted instances)", ok);
  }

  // Point-mass triple.
  {
    bool ok = true;
    std::uniform_real_distribution<double> ueps(0.01, 10.0);
    for (int it = 0; it < 10 && ok; ++it) {
      double eps = ueps(rng);
      auto d0 = EmpiricalMeasure::point_mass({0.0});
      auto d2 = EmpiricalMeasure::point_mass({2.0 * eps});
      auto d4 = EmpiricalMeasure::point_mass({4.0 * eps});
      ok = depsilon_exact(d0, d2, Metric::euclidean, eps).cost == 0.0 &&
           depsilon_exact(d0, d4, Metric::euclidean, eps).cost == 1.0;
    }
    run.check("point-mass triple: D(d0,d2e)=0, D(d0,d4e)=1", ok);
  }

  // Closed forms vs grid discretization (coarse field check).
  {
    bool ok = true;
    auto grid_cost = [](const UnivariateFamily& f, const UnivariateFamily& g,
                        double eps) {
      auto [gm, gn] = oracles::discretize_common(f, g, 2001);
      return depsilon_exact(gm.to_empirical(), gn.to_empirical(),
                            Metric::euclidean, eps)
          .cost;
    };
    for (double eps : {0.0, 0.15, 0.4}) {
      double a = gaussian_equal_var(0.0, 2.0, 1.0, eps).depsilon;
      ok = ok && std::abs(a - grid_cost(UnivariateFamily::gaussian(0, 1),
                                        UnivariateFamily::gaussian(2, 1), eps)) < 5e-3;
      double b = gaussian_same_mean(1.0, 0.5, eps).depsilon;
      ok = ok && std::abs(b - grid_cost(UnivariateFamily::gaussian(0, 1),
                                        UnivariateFamily::gaussian(0, 0.5), eps)) < 5e-3;
      double c = uniform_pair({0.0, 1.0}, {-0.5, 2.0}, eps).depsilon;
      ok = ok && std::abs(c - grid_cost(UnivariateFamily::uniform(0, 1),
                                        UnivariateFamily::uniform(-0.5, 2.0), eps)) <
                     5e-3;
    }
    run.check("closed forms match grid discretization (coarse)", ok);
  }

  // Duality closure on random analytic draws.
  {
    bool ok = true;
    std::uniform_real_distribution<double> um(-2.0, 2.0), us(0.3, 2.0),
        ue(0.0, 1.0);
    for (int it = 0; it < 20 && ok; ++it) {
      double s2 = us(rng), s1 = s2 + us(rng);
      double eps = ue(rng);
      auto sol = gaussian_same_mean(s1, s2, eps);
      if (!sol.degenerate) {
        double gap = strassen_gap(UnivariateFamily::gaussian(0, s1),
                                  UnivariateFamily::gaussian(0, s2),
                                  sol.interval_classifier(), eps);
        ok = std::abs(gap - sol.depsilon) <= 1e-9;
      }
      double m1 = um(rng), m2 = um(rng);
      auto gen = gaussian_general(m1, s1, m2, s2, eps);
      if (ok && !gen.degenerate) {
        double gap = strassen_gap(UnivariateFamily::gaussian(m1, s1),
                                  UnivariateFamily::gaussian(m2, s2),
                                  gen.interval_classifier(), eps);
        ok = std::abs(gap - gen.depsilon) <= 1e-9;
      }
    }
    run.check("duality closure on random Gaussian draws", ok);
  }

  // Interval-calculus laws on a dyadic lattice (all endpoint arithmetic is
  // exact there, so the identities are checked with no tolerance).
  {
    bool ok = true;
    std::uniform_int_distribution<int> ui(0, 1 << 16);
    std::uniform_int_distribution<int> uc(-(1 << 16), 1 << 16);
    constexpr double q = 1.0 / (1 << 8);
    for (int it = 0; it < 50 && ok; ++it) {
      std::vector<Interval> pieces;
      for (int k = 0; k < 1 + it % 4; ++k) {
        double lo = uc(rng) * q;
        double len = ui(rng) * q * 0.0625;
        pieces.push_back({lo, lo + len});
      }
      IntervalSet a(pieces);
      double eps = ui(rng) * q * 0.03125;
      ok = a.contains(a.thin(eps).expand(eps)) &&
           a.expand(eps).thin(eps).contains(a) &&
           a.expand(eps).expand(eps) == a.expand(2.0 * eps);
    }
    run.check("interval thick/thin containments and double expansion", ok);
  }

  return run.all_ok;
}

}  // namespace advrisk
