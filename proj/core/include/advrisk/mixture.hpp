#ifndef ADVRISK_MIXTURE_HPP
#define ADVRISK_MIXTURE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "advrisk/measures.hpp"

namespace advrisk {

/// Gaussian mixture with uniform weights: data points as centers, scaled
/// identity covariance. sigma == 0 denotes the empirical measure itself.
struct MixtureSpec {
  EmpiricalMeasure centers;
  double sigma = 0.0;
};

enum class MatchingMode { empirical, tight };

std::string matching_mode_name(MatchingMode m);

/// Cost of coupling N(0, sigma^2 I) to N(delta, sigma^2 I) by shifting the
/// overlap mass with a vector s of metric norm <= 2 eps chosen to minimize the
/// residual ||delta - s||_2: the full shift toward delta under the euclidean
/// metric (exact), the componentwise clamp under chebyshev (a valid bound).
/// cost = max(0, 1 - 2 Q(residual / (2 sigma))). Requires sigma > 0.
double pair_cost(std::span<const double> delta, double sigma, double eps,
                 Metric metric);

/// Permutation matching the atoms of mu to those of nu (equal counts, uniform
/// weights). `empirical` realizes an optimal D_eps coupling of the centers;
/// `tight` minimizes the summed pair_cost via an exact assignment solve
/// (shortest augmenting paths), capped at `assignment_cap` atoms per side.
std::vector<std::size_t> pair_matching(const EmpiricalMeasure& mu,
                                       const EmpiricalMeasure& nu, Metric metric,
                                       double eps, double sigma, MatchingMode mode,
                                       std::size_t assignment_cap = 4096);

struct MixtureBoundReport {
  double eps = 0.0;
  double sigma = 0.0;
  double risk_lb = 0.0;
  std::vector<std::size_t> matching;
  std::vector<double> per_pair_costs;
  MatchingMode mode = MatchingMode::tight;
};

/// Certified lower bound on the adversarial risk between two Gaussian
/// mixtures: match centers, transport the per-pair Gaussians by shifted
/// overlap. risk_lb = (1 - mean pair cost) / 2. At sigma == 0 this is the
/// exact empirical result.
MixtureBoundReport mixture_risk_lb(const MixtureSpec& a, const MixtureSpec& b,
                                   Metric metric, double eps, MatchingMode mode);

/// Half of the mean distance across the minimum-total-distance matching of
/// the two point sets: the reference smoothing scale.
double sigma_star(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                  Metric metric);

/// Exact minimum-total-cost assignment (Jonker-Volgenant shortest augmenting
/// paths) on a dense cost matrix; deterministic.
std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace advrisk

#endif  // ADVRISK_MIXTURE_HPP
