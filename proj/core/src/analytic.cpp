#include "advrisk/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "advrisk/discrete.hpp"
#include "advrisk/special.hpp"

namespace advrisk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_eps(double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
}

AnalyticSolution degenerate_interval_solution(int positive_class) {
  AnalyticSolution s;
  s.depsilon = 0.0;
  s.risk = 0.5;
  s.classifier = IntervalSet::whole_line();
  s.positive_class = positive_class;
  s.degenerate = true;
  return s;
}

double clamp_unit(double v, std::map<std::string, double>& diagnostics) {
  double c = std::clamp(v, 0.0, 1.0);
  if (std::abs(c - v) > 0.0) diagnostics["clamp"] = std::abs(c - v);
  return c;
}

}  // namespace

std::string AnalyticSolution::classifier_string() const {
  if (const auto* iv = std::get_if<IntervalSet>(&classifier)) return iv->to_string();
  return std::get<Halfspace>(classifier).to_string();
}

IntersectionRoots gaussian_intersections(double mu1, double sigma1, double mu2,
                                         double sigma2) {
  if (!(sigma1 > 0.0) || !(sigma2 > 0.0)) {
    throw std::invalid_argument("gaussian_intersections: sigmas must be positive");
  }
  // Normalize the second density to N(0, 1); x = mu2 + sigma2 * u.
  double m = (mu1 - mu2) / sigma2;
  double s = sigma1 / sigma2;
  if (s == 1.0) {
    if (m == 0.0) return {IntersectionRoots::Kind::identical, 0.0, 0.0};
    double x = mu2 + sigma2 * (m / 2.0);
    return {IntersectionRoots::Kind::one, x, x};
  }
  // u^2 (s^2 - 1) + 2 m u - (m^2 + 2 s^2 log s) = 0; always two real roots.
  double a = s * s - 1.0;
  double b = 2.0 * m;
  double c = -(m * m + 2.0 * s * s * std::log(s));
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) disc = 0.0;
  double sq = std::sqrt(disc);
  double q = -(b + (b >= 0.0 ? sq : -sq)) / 2.0;
  double u1, u2;
  if (q == 0.0) {
    u1 = u2 = -b / (2.0 * a);
  } else {
    u1 = q / a;
    u2 = c / q;
  }
  double x1 = mu2 + sigma2 * std::min(u1, u2);
  double x2 = mu2 + sigma2 * std::max(u1, u2);
  if (x1 == x2) return {IntersectionRoots::Kind::one, x1, x2};
  return {IntersectionRoots::Kind::two, x1, x2};
}

AnalyticSolution gaussian_equal_var(double mu0, double mu1, double sigma, double eps) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_equal_var: sigma > 0");
  check_eps(eps);
  double delta = std::abs(mu1 - mu0);
  if (eps >= delta / 2.0) {
    return degenerate_interval_solution(1);
  }
  AnalyticSolution s;
  double mid = (mu0 + mu1) / 2.0;
  s.risk = q_tail((delta / 2.0 - eps) / sigma);
  s.depsilon = 1.0 - 2.0 * s.risk;
  s.classifier = mu1 > mu0 ? IntervalSet::of(mid, kInf) : IntervalSet::of(-kInf, mid);
  s.positive_class = 1;
  s.boundaries["m"] = mid;
  return s;
}

AnalyticSolution gaussian_iso_ddim(const IsoGaussian& p0, const IsoGaussian& p1,
                                   double eps) {
  if (p0.dim() == 0 || p0.dim() != p1.dim()) {
    throw std::invalid_argument("gaussian_iso_ddim: dimension mismatch");
  }
  if (!(p0.sigma > 0.0) || !(p1.sigma > 0.0)) {
    throw std::invalid_argument("gaussian_iso_ddim: sigmas must be positive");
  }
  check_eps(eps);
  if (p0.sigma != p1.sigma) {
    if (p0.dim() == 1) {
      return gaussian_general(p0.mu[0], p0.sigma, p1.mu[0], p1.sigma, eps);
    }
    throw std::invalid_argument(
        "gaussian_iso_ddim: unequal sigmas are closed-form only in 1-D");
  }
  double delta2 = 0.0;
  for (std::size_t k = 0; k < p0.dim(); ++k) {
    double d = p1.mu[k] - p0.mu[k];
    delta2 += d * d;
  }
  double delta = std::sqrt(delta2);
  if (eps >= delta / 2.0) {
    AnalyticSolution s;
    s.depsilon = 0.0;
    s.risk = 0.5;
    s.classifier = Halfspace{std::vector<double>(p0.dim(), 0.0), -1.0};
    s.positive_class = 1;
    s.degenerate = true;
    return s;
  }
  AnalyticSolution s;
  s.risk = q_tail((delta / 2.0 - eps) / p0.sigma);
  s.depsilon = 1.0 - 2.0 * s.risk;
  Halfspace h;
  h.normal.resize(p0.dim());
  h.offset = 0.0;
  for (std::size_t k = 0; k < p0.dim(); ++k) {
    h.normal[k] = p1.mu[k] - p0.mu[k];
    h.offset += h.normal[k] * (p0.mu[k] + p1.mu[k]) / 2.0;
  }
  s.classifier = std::move(h);
  s.positive_class = 1;
  s.boundaries["delta"] = delta;
  return s;
}

AnalyticSolution gaussian_same_mean(double sigma1, double sigma2, double eps) {
  if (!(sigma1 > sigma2) || !(sigma2 > 0.0)) {
    throw std::invalid_argument("gaussian_same_mean: need sigma1 > sigma2 > 0");
  }
  check_eps(eps);
  // f(m + eps) = g(m - eps): intersections of f shifted left / g shifted right.
  IntersectionRoots ir = gaussian_intersections(-eps, sigma1, eps, sigma2);
  double m = ir.right;
  AnalyticSolution s;
  s.boundaries["m"] = m;
  double raw = 2.0 * q_tail((m + eps) / sigma1) - 2.0 * q_tail((m - eps) / sigma2);
  s.depsilon = clamp_unit(raw, s.diagnostics);
  if (s.depsilon <= 0.0) {
    auto d = degenerate_interval_solution(0);
    d.boundaries = s.boundaries;
    d.diagnostics = s.diagnostics;
    return d;
  }
  s.risk = (1.0 - s.depsilon) / 2.0;
  s.classifier = IntervalSet({{-kInf, -m}, {m, kInf}});
  s.positive_class = 0;  // the wider class, first argument
  return s;
}

AnalyticSolution gaussian_general(double mu1, double sigma1, double mu2, double sigma2,
                                  double eps) {
  if (!(sigma1 > 0.0) || !(sigma2 > 0.0)) {
    throw std::invalid_argument("gaussian_general: sigmas must be positive");
  }
  check_eps(eps);
  if (sigma1 == sigma2) {
    AnalyticSolution s = gaussian_equal_var(mu2, mu1, sigma1, eps);
    s.positive_class = 0;  // equal_var decides its second argument, our first
    return s;
  }
  bool swapped = sigma1 < sigma2;
  if (swapped) {
    std::swap(mu1, mu2);
    std::swap(sigma1, sigma2);
  }
  int wider = swapped ? 1 : 0;

  // Left boundary solves f(x - eps) = g(x + eps), right solves
  // f(x + eps) = g(x - eps); sigma1 > sigma2 guarantees two roots each.
  IntersectionRoots left_pair =
      gaussian_intersections(mu1 + eps, sigma1, mu2 - eps, sigma2);
  IntersectionRoots right_pair =
      gaussian_intersections(mu1 - eps, sigma1, mu2 + eps, sigma2);
  double b_l = left_pair.left;
  double b_r = right_pair.right;

  AnalyticSolution s;
  s.boundaries["m1"] = -b_l;
  s.boundaries["m2"] = b_r;
  if (!(b_l < b_r)) {
    auto d = degenerate_interval_solution(wider);
    d.boundaries = s.boundaries;
    return d;
  }
  auto cdf1 = [&](double x) { return normal_cdf((x - mu1) / sigma1); };
  auto q1 = [&](double x) { return q_tail((x - mu1) / sigma1); };
  auto cdf2 = [&](double x) { return normal_cdf((x - mu2) / sigma2); };
  auto q2 = [&](double x) { return q_tail((x - mu2) / sigma2); };
  double mu_thin = cdf1(b_l - eps) + q1(b_r + eps);
  double nu_expand = cdf2(b_l + eps) + q2(b_r - eps);
  double raw = mu_thin - nu_expand;
  s.depsilon = clamp_unit(raw, s.diagnostics);
  if (s.depsilon <= 0.0) {
    auto d = degenerate_interval_solution(wider);
    d.boundaries = s.boundaries;
    d.diagnostics = s.diagnostics;
    return d;
  }
  s.risk = (1.0 - s.depsilon) / 2.0;
  s.classifier = IntervalSet({{-kInf, b_l}, {b_r, kInf}});
  s.positive_class = wider;
  return s;
}

AnalyticSolution uniform_pair(Interval I, Interval J, double eps) {
  if (!(I.lo < I.hi) || !(J.lo < J.hi) || !std::isfinite(I.lo) ||
      !std::isfinite(I.hi) || !std::isfinite(J.lo) || !std::isfinite(J.hi)) {
    throw std::invalid_argument("uniform_pair: need finite non-degenerate intervals");
  }
  check_eps(eps);
  bool swapped = (I.hi - I.lo) > (J.hi - J.lo);
  if (swapped) std::swap(I, J);
  int narrower = swapped ? 1 : 0;

  double lo = std::max(I.lo - 2.0 * eps, J.lo);
  double hi = std::min(I.hi + 2.0 * eps, J.hi);
  double expanded_mass = std::max(0.0, hi - lo) / (J.hi - J.lo);

  AnalyticSolution s;
  s.diagnostics["expanded_overlap_mass"] = expanded_mass;
  s.depsilon = clamp_unit(1.0 - expanded_mass, s.diagnostics);
  s.boundaries["l"] = I.lo - eps;
  s.boundaries["r"] = I.hi + eps;
  if (s.depsilon <= 0.0) {
    auto d = degenerate_interval_solution(narrower);
    d.boundaries = s.boundaries;
    d.diagnostics = s.diagnostics;
    return d;
  }
  s.risk = (1.0 - s.depsilon) / 2.0;
  s.classifier = IntervalSet::of(I.lo - eps, I.hi + eps);
  s.positive_class = narrower;
  return s;
}

namespace {

double tri_pdf(double center, double half, double x) {
  double t = std::abs(x - center);
  if (t >= half) return 0.0;
  return (half - t) / (half * half);
}

// Matching points of two shifted triangular pdfs: sign changes and the
// endpoints of equality plateaus (including the zero plateaus outside both
// supports, which carry the half-line optima). The gap being optimized is
// piecewise smooth with derivative proportional to the pdf difference, so its
// optimum over a boundary lies in this finite set. Breakpoint arithmetic
// leaves ulp-level pdf dust at support edges, hence the tolerance.
std::vector<double> tri_match_points(double fc, double fh, double gc, double gh) {
  std::vector<double> brk = {fc - fh, fc, fc + fh, gc - gh, gc, gc + gh};
  std::sort(brk.begin(), brk.end());
  brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
  const double ztol = 1e-12 * std::max(1.0 / fh, 1.0 / gh);
  std::vector<double> out;
  auto h = [&](double x) { return tri_pdf(fc, fh, x) - tri_pdf(gc, gh, x); };
  for (std::size_t k = 0; k + 1 < brk.size(); ++k) {
    double p = brk[k], q = brk[k + 1];
    double hp = h(p), hq = h(q);
    if (std::abs(hp) <= ztol) out.push_back(p);
    if (std::abs(hq) <= ztol) out.push_back(q);
    if ((hp > ztol && hq < -ztol) || (hp < -ztol && hq > ztol)) {
      out.push_back(p + (q - p) * hp / (hp - hq));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
            out.end());
  return out;
}

}  // namespace

AnalyticSolution triangular_pair(UnivariateFamily::Triangular t1,
                                 UnivariateFamily::Triangular t2, double eps) {
  if (!(t1.halfwidth > 0.0) || !(t2.halfwidth > 0.0)) {
    throw std::invalid_argument("triangular_pair: halfwidths must be positive");
  }
  check_eps(eps);
  if (t1.center == t2.center && t1.halfwidth == t2.halfwidth) {
    return degenerate_interval_solution(0);
  }
  if (t1.halfwidth == t2.halfwidth) {
    throw std::invalid_argument(
        "triangular_pair: equal halfwidths with distinct centers are unsupported "
        "(class assignment of [l, r] is ambiguous); perturb one halfwidth");
  }
  bool swapped = t1.halfwidth > t2.halfwidth;
  if (swapped) std::swap(t1, t2);
  int narrower = swapped ? 1 : 0;

  UnivariateFamily mu = UnivariateFamily::triangular(t1.center, t1.halfwidth);
  UnivariateFamily nu = UnivariateFamily::triangular(t2.center, t2.halfwidth);

  // l solves f(l + eps) = g(l - eps), r solves f(r - eps) = g(r + eps).
  std::vector<double> lc =
      tri_match_points(t1.center - eps, t1.halfwidth, t2.center + eps, t2.halfwidth);
  std::vector<double> rc =
      tri_match_points(t1.center + eps, t1.halfwidth, t2.center - eps, t2.halfwidth);
  std::erase_if(lc, [&](double x) { return !(x < t1.center); });
  std::erase_if(rc, [&](double x) { return !(x > t1.center); });

  auto gap_of = [&](double l, double r) {
    return mu.mass(l + eps, r - eps) - nu.mass(l - eps, r + eps);
  };
  double best_gap = -kInf, best_l = 0.0, best_r = 0.0;
  for (double l : lc) {
    for (double r : rc) {
      double g = gap_of(l, r);
      // tie-break: largest l, then smallest r
      if (g > best_gap + 1e-15 ||
          (std::abs(g - best_gap) <= 1e-15 &&
           (l > best_l || (l == best_l && r < best_r)))) {
        best_gap = g;
        best_l = l;
        best_r = r;
      }
    }
  }

  AnalyticSolution s;
  if (lc.empty() || rc.empty() || !(best_gap > 0.0)) {
    auto d = degenerate_interval_solution(narrower);
    return d;
  }
  s.boundaries["l"] = best_l;
  s.boundaries["r"] = best_r;
  s.diagnostics["match_residual_l"] =
      std::abs(mu.pdf(best_l + eps) - nu.pdf(best_l - eps));
  s.diagnostics["match_residual_r"] =
      std::abs(mu.pdf(best_r - eps) - nu.pdf(best_r + eps));
  s.depsilon = clamp_unit(best_gap, s.diagnostics);
  s.risk = (1.0 - s.depsilon) / 2.0;
  s.classifier = IntervalSet::of(best_l, best_r);
  s.positive_class = narrower;
  return s;
}

double quantile_sup_distance(const UnivariateFamily& F, const UnivariateFamily& G,
                             int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("quantile_sup_distance: grid_n >= 2");
  double worst = 0.0;
  for (int k = 1; k <= grid_n; ++k) {
    double t = static_cast<double>(k) / (grid_n + 1.0);
    worst = std::max(worst, std::abs(F.quantile(t) - G.quantile(t)));
  }
  return worst;
}

bool zero_cost_check(const UnivariateFamily& F, const UnivariateFamily& G, double eps,
                     int grid_n) {
  check_eps(eps);
  return quantile_sup_distance(F, G, grid_n) <= 2.0 * eps + 1e-9;
}

bool cdf_domination_check(const UnivariateFamily& F, const UnivariateFamily& G,
                          double eps, int grid_n) {
  check_eps(eps);
  double lo = std::min(F.quantile(1e-8), G.quantile(1e-8));
  double hi = std::max(F.quantile(1.0 - 1e-8), G.quantile(1.0 - 1e-8));
  constexpr double tol = 1e-9;
  for (int k = 0; k < grid_n; ++k) {
    double x = lo + (hi - lo) * static_cast<double>(k) / (grid_n - 1.0);
    double fx = F.cdf(x);
    if (fx < G.cdf(x) - tol) return false;
    if (fx > G.cdf(x + 2.0 * eps) + tol) return false;
  }
  return true;
}

namespace {

double masked(const Density& f, Interval support, double x) {
  if (x < support.lo || x > support.hi) return 0.0;
  return f(x);
}

// Sign pattern "first then second" with zeros allowed anywhere.
bool single_crossing(const std::vector<double>& values, double tol, int first_sign) {
  bool seen_second = false;
  for (double v : values) {
    int s = v > tol ? 1 : (v < -tol ? -1 : 0);
    if (s == 0) continue;
    if (s == -first_sign) {
      seen_second = true;
    } else if (seen_second) {
      return false;  // first sign reappears after the crossing
    }
  }
  return true;
}

double endpoint_tol(double tol, double v) { return tol * (1.0 + std::abs(v)); }

}  // namespace

bool check_shift_condition(const Density& f, Interval support_f, const Density& g,
                           Interval support_g, double eps,
                           const ConditionCheckOptions& opts) {
  check_eps(eps);
  bool right_infinite = support_g.hi == kInf && support_f.hi == kInf;
  bool left_infinite = support_g.lo == -kInf && support_f.lo == -kInf;
  if (right_infinite == left_infinite) return false;

  double lo, hi, shift;
  if (right_infinite) {
    if (std::abs(support_f.lo - (support_g.lo + 2.0 * eps)) >
        endpoint_tol(opts.tol, support_g.lo)) {
      return false;
    }
    lo = support_g.lo;
    hi = support_g.lo + opts.probe_span;
    shift = 2.0 * eps;  // g(x) <= f(x + 2 eps)
  } else {
    if (std::abs(support_f.hi - (support_g.hi - 2.0 * eps)) >
        endpoint_tol(opts.tol, support_g.hi)) {
      return false;
    }
    lo = support_g.hi - opts.probe_span;
    hi = support_g.hi;
    shift = -2.0 * eps;  // g(x) <= f(x - 2 eps)
  }
  double scale = 0.0;
  std::vector<double> gs(opts.grid_n), fs(opts.grid_n);
  for (int k = 0; k < opts.grid_n; ++k) {
    double x = lo + (hi - lo) * static_cast<double>(k) / (opts.grid_n - 1.0);
    gs[k] = masked(g, support_g, x);
    fs[k] = masked(f, support_f, x + shift);
    scale = std::max({scale, gs[k], fs[k]});
  }
  double tol = opts.tol * (1.0 + scale);
  for (int k = 0; k < opts.grid_n; ++k) {
    if (gs[k] > fs[k] + tol) return false;
  }
  return true;
}

bool check_scrunch_condition(const Density& f, Interval support_f, const Density& g,
                             Interval support_g, double eps,
                             const ConditionCheckOptions& opts) {
  check_eps(eps);
  if (!std::isfinite(support_f.lo) || !std::isfinite(support_f.hi) ||
      !std::isfinite(support_g.lo) || !std::isfinite(support_g.hi)) {
    return false;
  }
  double two_eps = 2.0 * eps;
  if (!(support_f.hi - support_f.lo > two_eps)) return false;

  bool standard =
      std::abs(support_g.lo - (support_f.lo + two_eps)) <=
          endpoint_tol(opts.tol, support_f.lo) &&
      std::abs(support_g.hi - support_f.hi) <= endpoint_tol(opts.tol, support_f.hi);
  bool mirrored =
      std::abs(support_g.lo - support_f.lo) <= endpoint_tol(opts.tol, support_f.lo) &&
      std::abs(support_f.hi - (support_g.hi + two_eps)) <=
          endpoint_tol(opts.tol, support_g.hi);
  if (!standard && !mirrored) return false;

  auto sample = [&](double lo, double hi, double gshift) {
    std::vector<double> vals(opts.grid_n);
    double scale = 0.0;
    for (int k = 0; k < opts.grid_n; ++k) {
      double x = lo + (hi - lo) * static_cast<double>(k) / (opts.grid_n - 1.0);
      double fv = masked(f, support_f, x);
      double gv = masked(g, support_g, x + gshift);
      vals[k] = fv - gv;
      scale = std::max({scale, fv, gv});
    }
    double tol = opts.tol * (1.0 + scale);
    return std::make_pair(vals, tol);
  };

  if (standard) {
    auto [d0, tol0] = sample(support_f.lo, support_f.hi, 0.0);
    if (!single_crossing(d0, tol0, +1)) return false;
    auto [d1, tol1] = sample(support_f.lo, support_f.hi - two_eps, two_eps);
    return single_crossing(d1, tol1, -1);
  }
  auto [d0, tol0] = sample(support_f.lo, support_f.hi, 0.0);
  if (!single_crossing(d0, tol0, -1)) return false;
  auto [d1, tol1] = sample(support_f.lo + two_eps, support_f.hi, -two_eps);
  return single_crossing(d1, tol1, +1);
}

SymmetricBoundary motivating_example(double sigma0, double sigma1, double eps) {
  if (!(sigma0 > sigma1) || !(sigma1 > 0.0)) {
    throw std::invalid_argument("motivating_example: need sigma0 > sigma1 > 0");
  }
  check_eps(eps);
  double w0 = gaussian_intersections(0.0, sigma0, 0.0, sigma1).right;
  double k = (sigma0 * sigma0 + sigma1 * sigma1) / (sigma0 * sigma0 - sigma1 * sigma1);
  double w = w0 * std::sqrt(1.0 + eps * eps * (k * k - 1.0) / (w0 * w0)) + eps * k;
  double risk = 0.5 * (1.0 - 2.0 * (normal_cdf((w - eps) / sigma1) -
                                    normal_cdf((w + eps) / sigma0)));
  return {w, risk};
}

double halfspace_risk(const IsoGaussian& class0, const IsoGaussian& class1,
                      const Halfspace& decide1, double eps) {
  check_eps(eps);
  if (decide1.is_constant()) {
    double m0 = decide1.offset <= 0.0 ? 1.0 : 0.0;
    return 0.5 * (m0 + (1.0 - m0));
  }
  double norm = 0.0;
  for (double v : decide1.normal) norm += v * v;
  norm = std::sqrt(norm);
  Halfspace expanded{decide1.normal, decide1.offset - eps * norm};
  Halfspace comp_expanded{decide1.normal, decide1.offset + eps * norm};
  double err0 = halfspace_mass(class0, expanded);
  double err1 = 1.0 - halfspace_mass(class1, comp_expanded);
  return 0.5 * (err0 + err1);
}

}  // namespace advrisk
