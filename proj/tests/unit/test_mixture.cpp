#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "advrisk/analytic.hpp"
#include "advrisk/discrete.hpp"
#include "advrisk/mixture.hpp"
#include "advrisk/oracles.hpp"
#include "advrisk/special.hpp"

using namespace advrisk;

namespace {

EmpiricalMeasure cloud(std::mt19937_64& rng, std::size_t n, std::size_t d,
                       double spread, double shift = 0.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<double> flat(n * d);
  for (double& v : flat) v = u(rng) + shift;
  return EmpiricalMeasure::uniform(std::move(flat), d);
}

double matching_total(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                      const std::vector<std::size_t>& perm, double sigma, double eps,
                      Metric metric) {
  double total = 0.0;
  std::vector<double> delta(mu.dim());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t k = 0; k < mu.dim(); ++k) {
      delta[k] = nu.coord(perm[i], k) - mu.coord(i, k);
    }
    total += pair_cost(delta, sigma, eps, metric);
  }
  return total;
}

}  // namespace

TEST_CASE("pair_cost closed forms") {
  double sigma = 0.7, eps = 0.2;
  // full shift absorbs the displacement
  std::vector<double> small{0.3, 0.2};  // l2 norm < 0.4 = 2 eps
  CHECK(pair_cost(small, sigma, eps, Metric::euclidean) == 0.0);

  // residual z sigmas beyond the shift: cost = 1 - 2 Q(z)
  double z = 1.3;
  std::vector<double> delta{2.0 * eps + 2.0 * sigma * z, 0.0, 0.0};
  CHECK(pair_cost(delta, sigma, eps, Metric::euclidean) ==
        doctest::Approx(1.0 - 2.0 * q_tail(z)).epsilon(1e-12));

  // agreement with the 1-D equal-variance solver at Delta = |delta|
  double Delta = 2.0 * eps + 2.0 * sigma * z;
  auto sol = gaussian_equal_var(0.0, Delta, sigma, eps);
  CHECK(pair_cost(delta, sigma, eps, Metric::euclidean) ==
        doctest::Approx(sol.depsilon).epsilon(1e-12));

  // chebyshev clamp: delta = (3 eps, 0, ...) leaves l2 residual eps
  std::vector<double> cheb{3.0 * eps, 0.0, 0.0, 0.0};
  CHECK(pair_cost(cheb, sigma, eps, Metric::chebyshev) ==
        doctest::Approx(1.0 - 2.0 * q_tail(eps / (2.0 * sigma))).epsilon(1e-12));

  CHECK_THROWS_AS(pair_cost(small, 0.0, eps, Metric::euclidean),
                  std::invalid_argument);
}

TEST_CASE("pair_matching basics") {
  auto one_a = EmpiricalMeasure::point_mass({0.0, 0.0});
  auto one_b = EmpiricalMeasure::point_mass({1.0, 1.0});
  for (auto mode : {MatchingMode::empirical, MatchingMode::tight}) {
    auto perm = pair_matching(one_a, one_b, Metric::euclidean, 0.1, 0.5, mode);
    CHECK(perm == std::vector<std::size_t>{0});
  }

  // two well-separated aligned clusters: both modes match within clusters
  std::mt19937_64 rng(31);
  auto a0 = cloud(rng, 3, 2, 0.1, 0.0);
  auto a1 = cloud(rng, 3, 2, 0.1, 100.0);
  std::vector<double> flat_a(a0.flat());
  flat_a.insert(flat_a.end(), a1.flat().begin(), a1.flat().end());
  auto b0 = cloud(rng, 3, 2, 0.1, 0.0);
  auto b1 = cloud(rng, 3, 2, 0.1, 100.0);
  std::vector<double> flat_b(b0.flat());
  flat_b.insert(flat_b.end(), b1.flat().begin(), b1.flat().end());
  auto mu = EmpiricalMeasure::uniform(std::move(flat_a), 2);
  auto nu = EmpiricalMeasure::uniform(std::move(flat_b), 2);
  for (auto mode : {MatchingMode::empirical, MatchingMode::tight}) {
    auto perm = pair_matching(mu, nu, Metric::euclidean, 0.5, 1.0, mode);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK((i < 3) == (perm[i] < 3));  // stays in its own cluster
    }
  }
}

TEST_CASE("tight matching beats empirical and reaches the brute-force optimum") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> ue(0.05, 0.5), us(0.2, 1.0);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = 6;
    auto mu = cloud(rng, n, 2, 1.0);
    auto nu = cloud(rng, n, 2, 1.0);
    double eps = ue(rng), sigma = us(rng);
    Metric metric = it % 2 ? Metric::chebyshev : Metric::euclidean;

    auto tight = pair_matching(mu, nu, metric, eps, sigma, MatchingMode::tight);
    auto empirical =
        pair_matching(mu, nu, metric, eps, sigma, MatchingMode::empirical);
    double tight_total = matching_total(mu, nu, tight, sigma, eps, metric);
    double empirical_total = matching_total(mu, nu, empirical, sigma, eps, metric);

    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    std::vector<double> delta(2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < 2; ++k) {
          delta[k] = nu.coord(j, k) - mu.coord(i, k);
        }
        cost[i][j] = pair_cost(delta, sigma, eps, metric);
      }
    }
    auto [best, perm] = oracles::exhaustive_min_assignment(cost);

    CHECK(tight_total <= empirical_total + 1e-12);
    CHECK(tight_total == doctest::Approx(best).epsilon(1e-9));
    CHECK(empirical_total >= best - 1e-12);
  }
}

TEST_CASE("mixture_risk_lb reductions") {
  std::mt19937_64 rng(33);
  auto centers = cloud(rng, 5, 2, 1.0);
  MixtureSpec spec{centers, 0.4};
  auto rep = mixture_risk_lb(spec, spec, Metric::euclidean, 0.2, MatchingMode::tight);
  CHECK(rep.risk_lb == doctest::Approx(0.5).epsilon(1e-12));

  // sigma = 0 equals the exact empirical result, bit for bit
  auto mu = cloud(rng, 6, 2, 1.0);
  auto nu = cloud(rng, 6, 2, 1.0);
  for (double eps : {0.05, 0.3, 0.8}) {
    auto rep0 = mixture_risk_lb({mu, 0.0}, {nu, 0.0}, Metric::euclidean, eps,
                                MatchingMode::empirical);
    double exact =
        risk_from_depsilon(depsilon_exact(mu, nu, Metric::euclidean, eps).cost);
    CHECK(rep0.risk_lb == exact);
  }

  // single-pair input reproduces the equal-variance curve
  auto p0 = EmpiricalMeasure::point_mass({0.0});
  auto p1 = EmpiricalMeasure::point_mass({2.0});
  double sigma = 0.6;
  for (double eps : {0.0, 0.25, 0.5, 0.9}) {
    auto rep1 = mixture_risk_lb({p0, sigma}, {p1, sigma}, Metric::euclidean, eps,
                                MatchingMode::tight);
    auto sol = gaussian_equal_var(0.0, 2.0, sigma, eps);
    CHECK(rep1.risk_lb == doctest::Approx(sol.risk).epsilon(1e-12));
  }

  CHECK_THROWS_AS(mixture_risk_lb({mu, 0.1}, {nu, 0.2}, Metric::euclidean, 0.1,
                                  MatchingMode::tight),
                  std::invalid_argument);
  auto nu5 = cloud(rng, 5, 2, 1.0);
  CHECK_THROWS_AS(mixture_risk_lb({mu, 0.1}, {nu5, 0.1}, Metric::euclidean, 0.1,
                                  MatchingMode::tight),
                  std::invalid_argument);
}

TEST_CASE("mixture bound monotone in sigma and eps; tight >= empirical") {
  std::mt19937_64 rng(34);
  for (int it = 0; it < 20; ++it) {
    auto mu = cloud(rng, 5, 2, 1.0);
    auto nu = cloud(rng, 5, 2, 1.0);
    Metric metric = it % 2 ? Metric::chebyshev : Metric::euclidean;

    double prev = -1.0;
    for (double sigma : {0.1, 0.2, 0.5, 1.0, 2.0}) {
      auto rep =
          mixture_risk_lb({mu, sigma}, {nu, sigma}, metric, 0.2, MatchingMode::tight);
      CHECK(rep.risk_lb >= prev - 1e-12);
      prev = rep.risk_lb;
    }
    prev = -1.0;
    for (double eps : {0.0, 0.1, 0.3, 0.7, 1.5}) {
      auto rep =
          mixture_risk_lb({mu, 0.5}, {nu, 0.5}, metric, eps, MatchingMode::tight);
      CHECK(rep.risk_lb >= prev - 1e-12);
      prev = rep.risk_lb;
    }
    for (double eps : {0.1, 0.4}) {
      auto tight =
          mixture_risk_lb({mu, 0.5}, {nu, 0.5}, metric, eps, MatchingMode::tight);
      auto emp =
          mixture_risk_lb({mu, 0.5}, {nu, 0.5}, metric, eps, MatchingMode::empirical);
      CHECK(tight.risk_lb >= emp.risk_lb - 1e-12);
    }
  }
}

TEST_CASE("mixture bound is a valid lower bound (tiny 1-D instances vs grid)") {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (int it = 0; it < 10; ++it) {
    std::size_t n = 2 + it % 3;
    std::vector<double> xs(n), ys(n);
    for (auto& v : xs) v = ux(rng);
    for (auto& v : ys) v = ux(rng);
    auto mu = EmpiricalMeasure::uniform(std::vector<double>(xs), 1);
    auto nu = EmpiricalMeasure::uniform(std::vector<double>(ys), 1);
    double sigma = 0.3, eps = 0.15;
    auto rep =
        mixture_risk_lb({mu, sigma}, {nu, sigma}, Metric::euclidean, eps,
                        MatchingMode::tight);

    // grid-discretize both mixture densities and solve exactly
    const std::size_t g = 3001;
    double lo = std::min(*std::min_element(xs.begin(), xs.end()),
                         *std::min_element(ys.begin(), ys.end())) -
                6.0 * sigma;
    double hi = std::max(*std::max_element(xs.begin(), xs.end()),
                         *std::max_element(ys.begin(), ys.end())) +
                6.0 * sigma;
    double h = (hi - lo) / g;
    auto mixture_weights = [&](const std::vector<double>& centers) {
      std::vector<double> pts(g), w(g);
      double sum = 0.0;
      for (std::size_t k = 0; k < g; ++k) {
        double x = lo + (k + 0.5) * h;
        pts[k] = x;
        double dens = 0.0;
        for (double c : centers) {
          dens += normal_pdf((x - c) / sigma) / sigma;
        }
        w[k] = dens / centers.size() * h;
        sum += w[k];
      }
      for (double& v : w) v /= sum;
      return std::make_pair(pts, w);
    };
    auto [pa, wa] = mixture_weights(xs);
    auto [pb, wb] = mixture_weights(ys);
    EmpiricalMeasure ga(std::move(pa), 1, std::move(wa));
    EmpiricalMeasure gb(std::move(pb), 1, std::move(wb));
    double grid_risk =
        risk_from_depsilon(depsilon_exact(ga, gb, Metric::euclidean, eps).cost);
    CHECK(rep.risk_lb <= grid_risk + 2e-3);
  }
}

TEST_CASE("sigma_star") {
  auto a = EmpiricalMeasure::point_mass({0.0, 0.0});
  auto b = EmpiricalMeasure::point_mass({2.0, 0.0});
  CHECK(sigma_star(a, b, Metric::euclidean) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sigma_star(a, a, Metric::euclidean) == 0.0);

  std::mt19937_64 rng(36);
  auto mu = cloud(rng, 7, 3, 1.0);
  auto nu = cloud(rng, 7, 3, 1.0);
  double got = sigma_star(mu, nu, Metric::euclidean);
  // independent recomputation through the assignment solver
  std::vector<std::vector<double>> cost(7, std::vector<double>(7));
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      cost[i][j] = distance(Metric::euclidean, mu.point(i), nu.point(j));
    }
  }
  auto [best, perm] = oracles::exhaustive_min_assignment(cost);
  CHECK(got == doctest::Approx(0.5 * best / 7.0).epsilon(1e-9));
}
