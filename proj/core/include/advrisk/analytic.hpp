#ifndef ADVRISK_ANALYTIC_HPP
#define ADVRISK_ANALYTIC_HPP

#include <functional>
#include <map>
#include <string>
#include <variant>

#include "advrisk/intervals.hpp"
#include "advrisk/measures.hpp"

namespace advrisk {

/// Closed-form solution of the adversarial 0-1 problem for a parametric pair.
/// `classifier` is the decide-1 region; `positive_class` names which input
/// argument (0 or 1) plays class 1. Degenerate regimes return the constant
/// classifier (whole line / whole space) with risk 1/2.
struct AnalyticSolution {
  double depsilon = 0.0;
  double risk = 0.5;
  std::variant<IntervalSet, Halfspace> classifier;
  int positive_class = 1;
  std::map<std::string, double> boundaries;
  bool degenerate = false;
  std::map<std::string, double> diagnostics;

  const IntervalSet& interval_classifier() const {
    return std::get<IntervalSet>(classifier);
  }
  std::string classifier_string() const;
};

/// Intersection points of two Gaussian pdfs, solved through the equivalent
/// quadratic after normalizing the second density to N(0, 1).
struct IntersectionRoots {
  enum class Kind { two, one, identical };
  Kind kind;
  double left = 0.0;   // valid when kind != identical
  double right = 0.0;  // == left when kind == one
};

IntersectionRoots gaussian_intersections(double mu1, double sigma1, double mu2,
                                         double sigma2);

/// Equal-variance pair N(mu0, sigma^2) vs N(mu1, sigma^2). Non-degenerate
/// classifier is the half-line at the midpoint deciding the larger-mean class.
AnalyticSolution gaussian_equal_var(double mu0, double mu1, double sigma, double eps);

/// Equal-sigma isotropic Gaussians in R^d under the euclidean metric; reduces
/// to the 1-D problem along the mean difference, classifier is the
/// mid-hyperplane halfspace deciding class 1. Unequal sigmas are routed to the
/// general 1-D solver when d == 1 and rejected otherwise.
AnalyticSolution gaussian_iso_ddim(const IsoGaussian& p0, const IsoGaussian& p1,
                                   double eps);

/// Same-mean (centered) pair with sigma1 > sigma2: A = (-inf,-m] u [m,inf)
/// decides the wider class, m the right intersection of the eps-shifted pdfs.
AnalyticSolution gaussian_same_mean(double sigma1, double sigma2, double eps);

/// General univariate Gaussians; class 1 is the wider input. Equal sigmas
/// route to gaussian_equal_var.
AnalyticSolution gaussian_general(double mu1, double sigma1, double mu2, double sigma2,
                                  double eps);

/// Uniform measures on intervals I, J; the narrower interval is class 1 and
/// its eps-expansion is the decide-1 region.
AnalyticSolution uniform_pair(Interval I, Interval J, double eps);

/// Triangular pair with distinct halfwidths; A = [l, r] decides the narrower
/// class, with l/r chosen among the piecewise-linear matching points of the
/// eps-shifted densities (largest valid l, smallest valid r).
AnalyticSolution triangular_pair(UnivariateFamily::Triangular t1,
                                 UnivariateFamily::Triangular t2, double eps);

/// max over a uniform probability grid t = k/(n+1) of |F^{-1}(t) - G^{-1}(t)|;
/// approximates the sup from below.
double quantile_sup_distance(const UnivariateFamily& F, const UnivariateFamily& G,
                             int grid_n = 10001);

/// True iff the grid quantile sup-distance is <= 2 eps (D_eps vanishes).
bool zero_cost_check(const UnivariateFamily& F, const UnivariateFamily& G, double eps,
                     int grid_n = 10001);

/// Sufficient cdf-domination test on an x-grid: F >= G and F(x) <= G(x + 2 eps).
bool cdf_domination_check(const UnivariateFamily& F, const UnivariateFamily& G,
                          double eps, int grid_n = 10001);

using Density = std::function<double(double)>;

struct ConditionCheckOptions {
  int grid_n = 10001;
  double tol = 1e-9;
  double probe_span = 40.0;  // window length probed beyond finite endpoints
};

/// Verifies the translation-coupling hypotheses for restrictions (f on
/// support_f) and (g on support_g): supports offset by exactly 2 eps toward
/// the common infinite side and g dominated by the 2 eps translate of f.
bool check_shift_condition(const Density& f, Interval support_f, const Density& g,
                           Interval support_g, double eps,
                           const ConditionCheckOptions& opts = {});

/// Verifies the compression-coupling hypotheses: supports sharing one
/// endpoint and offset by 2 eps at the other, single crossing of f - g, and
/// the opposite single crossing of f - g(. + 2 eps).
bool check_scrunch_condition(const Density& f, Interval support_f, const Density& g,
                             Interval support_g, double eps,
                             const ConditionCheckOptions& opts = {});

/// Centered-Gaussian worked example (sigma0 > sigma1): closed-form optimal
/// boundary w*_eps of the classifier deciding class 1 on [-w, w], and its risk.
struct SymmetricBoundary {
  double boundary;
  double risk;
};
SymmetricBoundary motivating_example(double sigma0, double sigma1, double eps);

/// Risk of a halfspace classifier (decide-1 region) for two isotropic
/// Gaussians under the euclidean metric.
double halfspace_risk(const IsoGaussian& class0, const IsoGaussian& class1,
                      const Halfspace& decide1, double eps);

}  // namespace advrisk

#endif  // ADVRISK_ANALYTIC_HPP
