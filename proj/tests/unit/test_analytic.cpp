#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "advrisk/analytic.hpp"
#include "advrisk/discrete.hpp"
#include "advrisk/oracles.hpp"
#include "advrisk/special.hpp"

using namespace advrisk;

namespace {

double grid_depsilon(const UnivariateFamily& f, const UnivariateFamily& g, double eps,
                     std::size_t n = 2001) {
  auto [gm, gn] = oracles::discretize_common(f, g, n);
  return depsilon_exact(gm.to_empirical(), gn.to_empirical(), Metric::euclidean, eps)
      .cost;
}

// Bracketing root of the pdf difference, used as an independent check on the
// quadratic intersection solver.
double bisect_pdf_diff(const UnivariateFamily& f, const UnivariateFamily& g,
                       double lo, double hi) {
  auto h = [&](double x) { return f.pdf(x) - g.pdf(x); };
  REQUIRE(h(lo) * h(hi) < 0.0);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (h(lo) * h(mid) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double tv_quadrature(const UnivariateFamily& f, const UnivariateFamily& g, double lo,
                     double hi) {
  const int n = 400000;
  double h = (hi - lo) / n;
  double s = 0.0;
  for (int k = 0; k <= n; ++k) {
    double x = lo + k * h;
    double v = std::abs(f.pdf(x) - g.pdf(x));
    s += (k == 0 || k == n) ? 0.5 * v : v;
  }
  return s * h / 2.0;
}

}  // namespace

TEST_CASE("gaussian_intersections") {
  // symmetric centered pair: roots come in +- pairs
  auto sym = gaussian_intersections(0.0, 1.0, 0.0, 2.0);
  REQUIRE(sym.kind == IntersectionRoots::Kind::two);
  CHECK(sym.left == doctest::Approx(-sym.right).epsilon(1e-12));

  // equal variances: single midpoint root
  auto mid = gaussian_intersections(0.0, 1.0, 2.0, 1.0);
  REQUIRE(mid.kind == IntersectionRoots::Kind::one);
  CHECK(mid.left == doctest::Approx(1.0).epsilon(1e-14));

  auto ident = gaussian_intersections(0.5, 1.5, 0.5, 1.5);
  CHECK(ident.kind == IntersectionRoots::Kind::identical);

  // roots agree with bisection on the pdf difference
  auto f = UnivariateFamily::gaussian(0.0, 1.0);
  auto g = UnivariateFamily::gaussian(1.0, 2.0);
  auto r = gaussian_intersections(0.0, 1.0, 1.0, 2.0);
  REQUIRE(r.kind == IntersectionRoots::Kind::two);
  double left_ref = bisect_pdf_diff(f, g, r.left - 0.5, r.left + 0.5);
  double right_ref = bisect_pdf_diff(f, g, r.right - 0.5, r.right + 0.5);
  CHECK(r.left == doctest::Approx(left_ref).epsilon(1e-9));
  CHECK(r.right == doctest::Approx(right_ref).epsilon(1e-9));

  // residual of the defining equation
  CHECK(std::abs(f.pdf(r.left) - g.pdf(r.left)) < 1e-10 * f.pdf(0.0));
  CHECK(std::abs(f.pdf(r.right) - g.pdf(r.right)) < 1e-10 * f.pdf(0.0));
}

TEST_CASE("gaussian_equal_var examples") {
  auto deg = gaussian_equal_var(0.0, 2.0, 1.0, 1.0);
  CHECK(deg.degenerate);
  CHECK(deg.risk == 0.5);
  CHECK(deg.depsilon == 0.0);

  auto bayes = gaussian_equal_var(0.0, 2.0, 1.0, 0.0);
  CHECK(bayes.risk == doctest::Approx(q_tail(1.0)).epsilon(1e-14));
  CHECK(bayes.interval_classifier() ==
        IntervalSet::of(1.0, std::numeric_limits<double>::infinity()));

  auto mid = gaussian_equal_var(0.0, 2.0, 1.0, 0.5);
  CHECK(mid.risk == doctest::Approx(q_tail(0.5)).epsilon(1e-14));
  // cross-check against the discretized exact solver
  double grid = grid_depsilon(UnivariateFamily::gaussian(0.0, 1.0),
                              UnivariateFamily::gaussian(2.0, 1.0), 0.5);
  CHECK(std::abs(mid.depsilon - grid) < 5e-3);
}

TEST_CASE("gaussian_iso_ddim examples") {
  IsoGaussian p0{{0.0, 0.0}, 1.0};
  IsoGaussian p1{{3.0, 4.0}, 1.0};
  auto same = gaussian_iso_ddim(p0, p0, 0.0);
  CHECK(same.degenerate);
  CHECK(same.risk == 0.5);

  auto sol = gaussian_iso_ddim(p0, p1, 0.0);
  CHECK(sol.risk == doctest::Approx(q_tail(2.5)).epsilon(1e-14));
  CHECK(std::holds_alternative<Halfspace>(sol.classifier));

  auto deg = gaussian_iso_ddim(p0, p1, 2.5);
  CHECK(deg.degenerate);
  CHECK(deg.risk == 0.5);

  // duality closure for the halfspace classifier
  auto mid = gaussian_iso_ddim(p0, p1, 1.0);
  const auto& h = std::get<Halfspace>(mid.classifier);
  CHECK(strassen_gap(p1, p0, h, 1.0) == doctest::Approx(mid.depsilon).epsilon(1e-12));
  CHECK(halfspace_risk(p0, p1, h, 1.0) == doctest::Approx(mid.risk).epsilon(1e-12));

  IsoGaussian q0{{0.0, 0.0}, 1.0};
  IsoGaussian q1{{1.0, 0.0}, 2.0};
  CHECK_THROWS_AS(gaussian_iso_ddim(q0, q1, 0.1), std::invalid_argument);
  IsoGaussian r0{{0.0}, 1.0};
  IsoGaussian r1{{1.0}, 2.0};
  CHECK_NOTHROW(gaussian_iso_ddim(r0, r1, 0.1));  // 1-D routes to general solver
}

TEST_CASE("gaussian_same_mean: boundary equation, Bayes case, duality") {
  auto sol = gaussian_same_mean(1.0, 0.5, 0.3);
  double m = sol.boundaries.at("m");
  auto f = UnivariateFamily::gaussian(0.0, 1.0);
  auto g = UnivariateFamily::gaussian(0.0, 0.5);
  // defining equation f(m + eps) = g(m - eps)
  CHECK(std::abs(f.pdf(m + 0.3) - g.pdf(m - 0.3)) < 1e-10 * g.pdf(0.0));

  // Bayes case: depsilon equals quadrature TV
  auto bayes = gaussian_same_mean(1.0, 0.5, 0.0);
  CHECK(std::abs(bayes.depsilon - tv_quadrature(f, g, -12.0, 12.0)) < 1e-6);

  // near-equal variances: risk just below 1/2
  auto tiny = gaussian_same_mean(1.0, 0.999, 0.05);
  CHECK(tiny.risk <= 0.5);
  CHECK(tiny.risk >= 0.45);

  // duality closure and classifier attainment
  double gap = strassen_gap(f, g, sol.interval_classifier(), 0.3);
  CHECK(gap == doctest::Approx(sol.depsilon).epsilon(1e-12));
  CHECK(classifier_risk(g, f, sol.interval_classifier(), 0.3) ==
        doctest::Approx(sol.risk).epsilon(1e-12));

  CHECK_THROWS_AS(gaussian_same_mean(0.5, 1.0, 0.1), std::invalid_argument);
}

TEST_CASE("motivating_example matches gaussian_same_mean") {
  auto ex = motivating_example(1.0, 0.5, 0.3);
  auto sol = gaussian_same_mean(1.0, 0.5, 0.3);
  CHECK(std::abs(ex.boundary - sol.boundaries.at("m")) < 1e-8);
  CHECK(ex.risk == doctest::Approx(sol.risk).epsilon(1e-9));
  // phi_1(w - eps) = phi_0(w + eps)
  auto f0 = UnivariateFamily::gaussian(0.0, 1.0);
  auto f1 = UnivariateFamily::gaussian(0.0, 0.5);
  CHECK(std::abs(f1.pdf(ex.boundary - 0.3) - f0.pdf(ex.boundary + 0.3)) < 1e-9);

  auto bayes = motivating_example(1.0, 0.5, 0.0);
  auto bayes_sol = gaussian_same_mean(1.0, 0.5, 0.0);
  CHECK(bayes.boundary == doctest::Approx(bayes_sol.boundaries.at("m")).epsilon(1e-12));
  CHECK(bayes.risk == doctest::Approx(bayes_sol.risk).epsilon(1e-12));
}

TEST_CASE("gaussian_general: reductions and grid agreement") {
  // same means reduce to gaussian_same_mean
  auto a = gaussian_general(0.0, 1.0, 0.0, 0.5, 0.25);
  auto b = gaussian_same_mean(1.0, 0.5, 0.25);
  CHECK(a.depsilon == doctest::Approx(b.depsilon).epsilon(1e-10));
  CHECK(a.risk == doctest::Approx(b.risk).epsilon(1e-10));

  // near-equal sigmas approach the equal-variance closed form
  auto c = gaussian_general(0.0, 1.001, 2.0, 1.0, 0.5);
  auto d = gaussian_equal_var(0.0, 2.0, 1.0, 0.5);
  CHECK(std::abs(c.risk - d.risk) < 1e-4);

  // equal sigmas route exactly
  auto e = gaussian_general(0.0, 1.0, 2.0, 1.0, 0.5);
  CHECK(e.risk == doctest::Approx(d.risk).epsilon(1e-15));

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> um(-1.5, 1.5), us(0.4, 1.6), ue(0.0, 0.6);
  for (int it = 0; it < 10; ++it) {
    double m1 = um(rng), m2 = um(rng);
    double s2 = us(rng), s1 = s2 + 0.2 + 0.5 * us(rng);
    double eps = ue(rng);
    auto sol = gaussian_general(m1, s1, m2, s2, eps);
    auto fam1 = UnivariateFamily::gaussian(m1, s1);
    auto fam2 = UnivariateFamily::gaussian(m2, s2);
    double grid = grid_depsilon(fam1, fam2, eps);
    CHECK(std::abs(sol.depsilon - grid) < 5e-3);
    if (!sol.degenerate) {
      CHECK(strassen_gap(fam1, fam2, sol.interval_classifier(), eps) ==
            doctest::Approx(sol.depsilon).epsilon(1e-10));
      CHECK(classifier_risk(fam2, fam1, sol.interval_classifier(), eps) ==
            doctest::Approx(sol.risk).epsilon(1e-10));
      // boundary equations f(b_l - eps) = g(b_l + eps), f(b_r + eps) = g(b_r - eps)
      double b_l = -sol.boundaries.at("m1");
      double b_r = sol.boundaries.at("m2");
      double scale = fam2.pdf(m2);
      CHECK(std::abs(fam1.pdf(b_l - eps) - fam2.pdf(b_l + eps)) < 1e-9 * scale);
      CHECK(std::abs(fam1.pdf(b_r + eps) - fam2.pdf(b_r - eps)) < 1e-9 * scale);
    }
  }
}

TEST_CASE("uniform_pair examples") {
  auto same = uniform_pair({0.0, 1.0}, {0.0, 1.0}, 0.2);
  CHECK(same.degenerate);
  CHECK(same.risk == 0.5);

  auto nested = uniform_pair({0.0, 1.0}, {0.0, 10.0}, 0.0);
  CHECK(nested.depsilon == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(nested.risk == doctest::Approx(0.05).epsilon(1e-14));
  double grid = grid_depsilon(UnivariateFamily::uniform(0.0, 1.0),
                              UnivariateFamily::uniform(0.0, 10.0), 0.0, 4001);
  CHECK(std::abs(nested.depsilon - grid) < 5e-3);

  auto disjoint = uniform_pair({0.0, 1.0}, {5.0, 6.0}, 0.1);
  CHECK(disjoint.depsilon == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(disjoint.risk == doctest::Approx(0.0).epsilon(1e-14));

  // classifier attainment and duality
  auto mid = uniform_pair({0.0, 1.0}, {-1.0, 3.0}, 0.15);
  auto I = UnivariateFamily::uniform(0.0, 1.0);
  auto J = UnivariateFamily::uniform(-1.0, 3.0);
  CHECK(strassen_gap(I, J, mid.interval_classifier(), 0.15) ==
        doctest::Approx(mid.depsilon).epsilon(1e-12));
  CHECK(classifier_risk(J, I, mid.interval_classifier(), 0.15) ==
        doctest::Approx(mid.risk).epsilon(1e-12));

  CHECK_THROWS_AS(uniform_pair({1.0, 1.0}, {0.0, 2.0}, 0.1), std::invalid_argument);
}

TEST_CASE("triangular_pair examples") {
  auto same = triangular_pair({0.0, 1.0}, {0.0, 1.0}, 0.2);
  CHECK(same.degenerate);
  CHECK(same.risk == 0.5);

  CHECK_THROWS_AS(triangular_pair({0.0, 1.0}, {2.0, 1.0}, 0.1),
                  std::invalid_argument);

  // Bayes case equals quadrature TV
  auto f = UnivariateFamily::triangular(0.0, 1.0);
  auto g = UnivariateFamily::triangular(0.0, 3.0);
  auto bayes = triangular_pair({0.0, 1.0}, {0.0, 3.0}, 0.0);
  CHECK(std::abs(bayes.depsilon - tv_quadrature(f, g, -3.5, 3.5)) < 1e-6);

  // shifted pair against the grid oracle
  auto sol = triangular_pair({0.0, 1.0}, {0.5, 2.0}, 0.1);
  double grid = grid_depsilon(UnivariateFamily::triangular(0.0, 1.0),
                              UnivariateFamily::triangular(0.5, 2.0), 0.1, 4001);
  CHECK(std::abs(sol.depsilon - grid) < 2e-3);

  // duality closure, attainment, boundary equations
  auto mu = UnivariateFamily::triangular(0.0, 1.0);
  auto nu = UnivariateFamily::triangular(0.5, 2.0);
  CHECK(strassen_gap(mu, nu, sol.interval_classifier(), 0.1) ==
        doctest::Approx(sol.depsilon).epsilon(1e-12));
  CHECK(classifier_risk(nu, mu, sol.interval_classifier(), 0.1) ==
        doctest::Approx(sol.risk).epsilon(1e-12));
  double l = sol.boundaries.at("l"), r = sol.boundaries.at("r");
  CHECK(std::abs(mu.pdf(l + 0.1) - nu.pdf(l - 0.1)) < 1e-9);
  CHECK(std::abs(mu.pdf(r - 0.1) - nu.pdf(r + 0.1)) < 1e-9);

  // disjoint supports: risk 0 for small eps
  auto far = triangular_pair({0.0, 1.0}, {10.0, 2.0}, 0.5);
  CHECK(far.depsilon == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(far.risk == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("quantile_sup_distance and zero-cost criteria") {
  auto g0 = UnivariateFamily::gaussian(0.0, 1.0);
  CHECK(quantile_sup_distance(g0, g0) == 0.0);

  auto g3 = UnivariateFamily::gaussian(3.0, 1.0);
  CHECK(quantile_sup_distance(g0, g3) == doctest::Approx(3.0).epsilon(1e-9));

  auto u1 = UnivariateFamily::uniform(0.0, 1.0);
  auto u2 = UnivariateFamily::uniform(0.0, 2.0);
  int n = 10001;
  CHECK(quantile_sup_distance(u1, u2, n) ==
        doctest::Approx(static_cast<double>(n) / (n + 1)).epsilon(1e-12));

  CHECK(zero_cost_check(g0, g0, 0.0));
  CHECK_FALSE(zero_cost_check(g0, g3, 1.0));
  CHECK(zero_cost_check(g0, UnivariateFamily::gaussian(1.9, 1.0), 1.0));

  // the cdf-domination test implies the quantile criterion (F above G, with
  // the 2 eps translate of G back above F)
  CHECK(cdf_domination_check(g0, UnivariateFamily::gaussian(1.9, 1.0), 1.0));
  CHECK_FALSE(cdf_domination_check(g0, g3, 1.0));

  // zero cost implies vanishing grid depsilon
  double grid = grid_depsilon(g0, UnivariateFamily::gaussian(1.9, 1.0), 1.0);
  CHECK(grid < 5e-3);
}

TEST_CASE("shift/scrunch condition checkers") {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double eps = 0.25;

  // exponential tail translated by exactly 2 eps
  Density f_exp = [](double x) { return std::exp(-(x - 0.5)); };
  Density g_exp = [](double x) { return std::exp(-x); };
  CHECK(check_shift_condition(f_exp, {0.5, kInf}, g_exp, {0.0, kInf}, eps));
  // wrong support offset
  CHECK_FALSE(check_shift_condition(f_exp, {0.9, kInf}, g_exp, {0.0, kInf}, eps));

  // same-mean construction: the outer regions satisfy the translation
  // condition, the inner flank regions the compression condition
  double s1 = 1.0, s2 = 0.5;
  auto sol = gaussian_same_mean(s1, s2, eps);
  double m = sol.boundaries.at("m");
  auto F = UnivariateFamily::gaussian(0.0, s1);
  auto G = UnivariateFamily::gaussian(0.0, s2);
  Density fd = [F](double x) { return F.pdf(x); };
  Density gd = [G](double x) { return G.pdf(x); };
  CHECK(check_shift_condition(fd, {m + eps, kInf}, gd, {m - eps, kInf}, eps));

  // flank region [-m-eps, -r) vs [-m+eps, -r): r solves the mass balance
  double r = 0.0;
  {
    auto h = [&](double t) {
      return F.mass(-m - eps, t) - G.mass(-m + eps, t);
    };
    double lo = -m + eps, hi = -1e-9;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (h(lo) * h(mid) <= 0.0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    r = -0.5 * (lo + hi);
  }
  CHECK(r > 0.0);
  CHECK(r < m - eps);
  CHECK(check_scrunch_condition(fd, {-m - eps, -r}, gd, {-m + eps, -r}, eps));
  // mirror image on the right flank
  CHECK(check_scrunch_condition(fd, {r, m + eps}, gd, {r, m - eps}, eps));
}

TEST_CASE("closed forms are not beaten by a dense search over witness sets") {
  // If a solver picked the wrong boundary regime, some interval set would
  // certify a strictly larger transport gap. Search two-sided co-intervals
  // (-inf, a] u [b, inf) and central intervals [a, b] over a fine grid and
  // require the closed form to stay within refinement noise of the best.
  auto best_gap = [](const UnivariateFamily& mu, const UnivariateFamily& nu,
                     double eps, double lo, double hi) {
    constexpr int kGrid = 400;
    double best = 0.0;
    for (int i = 0; i <= kGrid; ++i) {
      double a = lo + (hi - lo) * i / kGrid;
      for (int j = i; j <= kGrid; ++j) {
        double b = lo + (hi - lo) * j / kGrid;
        IntervalSet outer({{-std::numeric_limits<double>::infinity(), a},
                           {b, std::numeric_limits<double>::infinity()}});
        best = std::max(best, strassen_gap(mu, nu, outer, eps));
        best = std::max(best, strassen_gap(nu, mu, IntervalSet::of(a, b), eps));
      }
    }
    return best;
  };

  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> um(-1.0, 1.0), us(0.4, 1.5), ue(0.0, 0.7);
  for (int it = 0; it < 8; ++it) {
    double s2 = us(rng), s1 = s2 + 0.2 + 0.5 * us(rng);
    double m1 = um(rng), m2 = um(rng), eps = ue(rng);
    auto fw = UnivariateFamily::gaussian(m1, s1);
    auto fn = UnivariateFamily::gaussian(m2, s2);
    double solver = gaussian_general(m1, s1, m2, s2, eps).depsilon;
    double searched = best_gap(fw, fn, eps, -6.0, 6.0);
    CHECK(solver >= searched - 2e-4);  // grid refinement noise only
  }
  for (int it = 0; it < 4; ++it) {
    double s2 = us(rng), s1 = s2 + 0.2 + us(rng), eps = ue(rng);
    auto fw = UnivariateFamily::gaussian(0.0, s1);
    auto fn = UnivariateFamily::gaussian(0.0, s2);
    double solver = gaussian_same_mean(s1, s2, eps).depsilon;
    CHECK(solver >= best_gap(fw, fn, eps, -6.0, 6.0) - 2e-4);
  }
  for (int it = 0; it < 4; ++it) {
    double a = um(rng), b = a + 0.3 + us(rng);
    double c = um(rng), d = c + 0.3 + 2.0 * us(rng);
    double eps = ue(rng);
    Interval I{a, b}, J{c, d};
    if (b - a > d - c) std::swap(I, J);
    auto fn = UnivariateFamily::uniform(I.lo, I.hi);
    auto fw = UnivariateFamily::uniform(J.lo, J.hi);
    double solver = uniform_pair(I, J, eps).depsilon;
    // narrower class is decided on the central interval here
    CHECK(solver >= best_gap(fw, fn, eps, -5.0, 5.0) - 2e-4);
  }
  for (int it = 0; it < 4; ++it) {
    double h1 = 0.4 + us(rng), h2 = h1 + 0.2 + us(rng);
    double c1 = um(rng), c2 = um(rng), eps = ue(rng);
    auto fn = UnivariateFamily::triangular(c1, h1);
    auto fw = UnivariateFamily::triangular(c2, h2);
    double solver = triangular_pair({c1, h1}, {c2, h2}, eps).depsilon;
    CHECK(solver >= best_gap(fw, fn, eps, -6.0, 6.0) - 2e-4);
  }
}

TEST_CASE("no random interval classifier beats the analytic optimum") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> ux(-4.0, 4.0), ue(0.0, 0.8);

  auto random_set = [&rng, &ux]() {
    std::uniform_int_distribution<int> np(0, 3);
    std::vector<Interval> pieces;
    int n = np(rng);
    for (int k = 0; k < n; ++k) {
      double a = ux(rng), b = ux(rng);
      if (a > b) std::swap(a, b);
      pieces.push_back({a, b});
    }
    return IntervalSet(std::move(pieces));
  };

  struct Case {
    UnivariateFamily class0;
    UnivariateFamily class1;
    std::function<double(double)> optimum;
  };
  std::vector<Case> cases;
  cases.push_back({UnivariateFamily::gaussian(0.0, 1.0),
                   UnivariateFamily::gaussian(1.5, 1.0),
                   [](double e) { return gaussian_equal_var(0.0, 1.5, 1.0, e).risk; }});
  cases.push_back({UnivariateFamily::gaussian(0.0, 0.6),
                   UnivariateFamily::gaussian(0.0, 1.4),
                   [](double e) { return gaussian_same_mean(1.4, 0.6, e).risk; }});
  cases.push_back({UnivariateFamily::gaussian(0.5, 0.7),
                   UnivariateFamily::gaussian(-0.3, 1.2),
                   [](double e) {
                     return gaussian_general(-0.3, 1.2, 0.5, 0.7, e).risk;
                   }});
  cases.push_back({UnivariateFamily::uniform(-1.0, 2.0),
                   UnivariateFamily::uniform(0.0, 1.0),
                   [](double e) {
                     return uniform_pair({0.0, 1.0}, {-1.0, 2.0}, e).risk;
                   }});
  cases.push_back({UnivariateFamily::triangular(0.3, 2.2),
                   UnivariateFamily::triangular(0.0, 1.0),
                   [](double e) {
                     return triangular_pair({0.0, 1.0}, {0.3, 2.2}, e).risk;
                   }});

  for (const auto& c : cases) {
    for (int it = 0; it < 100; ++it) {
      double eps = ue(rng);
      double opt = c.optimum(eps);
      double risk = classifier_risk(c.class0, c.class1, random_set(), eps);
      CHECK(risk >= opt - 1e-9);
    }
  }
}

TEST_CASE("grid depsilon converges at rate O(1/n) with bounded constant") {
  auto f = UnivariateFamily::gaussian(0.0, 1.0);
  auto g = UnivariateFamily::gaussian(0.0, 0.5);
  double eps = 0.3;
  double closed = gaussian_same_mean(1.0, 0.5, eps).depsilon;
  double worst_c = 0.0;
  double prev_err = 1.0;
  for (std::size_t n : {251, 501, 1001, 2001, 4001}) {
    double err = std::abs(grid_depsilon(f, g, eps, n) - closed);
    worst_c = std::max(worst_c, err * static_cast<double>(n));
    CHECK(err < prev_err + 1e-6);  // roughly shrinking
    prev_err = err;
  }
  MESSAGE("measured C in err <= C/n: ", worst_c);
  CHECK(worst_c < 10.0);
}

TEST_CASE("risk monotone in eps and bounded by [bayes, 1/2]") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> us(0.3, 1.5), um(-1.0, 1.0);
  for (int it = 0; it < 20; ++it) {
    double s2 = us(rng), s1 = s2 + 0.3;
    double m1 = um(rng), m2 = um(rng);
    double bayes = gaussian_general(m1, s1, m2, s2, 0.0).risk;
    double prev = bayes;
    for (double eps : {0.0, 0.1, 0.2, 0.4, 0.8, 1.6, 3.2}) {
      double r = gaussian_general(m1, s1, m2, s2, eps).risk;
      CHECK(r >= prev - 1e-12);
      CHECK(r >= bayes - 1e-12);
      CHECK(r <= 0.5 + 1e-12);
      prev = r;
    }
  }
}
