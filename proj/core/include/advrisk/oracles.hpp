#ifndef ADVRISK_ORACLES_HPP
#define ADVRISK_ORACLES_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "advrisk/measures.hpp"

namespace advrisk {

/// 1-D quadrature approximation of a univariate family: midpoint-rule atoms
/// over the central `coverage` quantile range, weights renormalized to 1.
struct GridMeasure {
  std::vector<double> points;
  std::vector<double> weights;

  EmpiricalMeasure to_empirical() const;
};

/// Brute-force reference solvers. They are size-capped on purpose: within the
/// caps their answers are ground truth, beyond them they refuse to guess.
namespace oracles {

/// Exact minimum-cost assignment by enumerating all n! permutations, n <= 8.
/// Ties break to the lexicographically smallest permutation.
std::pair<double, std::vector<std::size_t>> exhaustive_min_assignment(
    const std::vector<std::vector<double>>& cost);

/// Exact optimum of the transportation problem min sum c_ij f_ij with
/// marginals mu_w / nu_w (equal totals within 1e-9), supports <= 64 atoms
/// each. Successive-shortest-path min-cost flow with deterministic pivoting.
double small_transport_lp(std::span<const double> mu_w, std::span<const double> nu_w,
                          const std::vector<std::vector<double>>& cost);

GridMeasure discretize(const UnivariateFamily& f, std::size_t n,
                       double coverage = 1.0 - 1e-8);

/// Both families on one shared midpoint grid spanning the union of their
/// central `coverage` quantile ranges, so the discretized measures share
/// atoms (their D_0 is the discrete total variation).
std::pair<GridMeasure, GridMeasure> discretize_common(const UnivariateFamily& f,
                                                      const UnivariateFamily& g,
                                                      std::size_t n,
                                                      double coverage = 1.0 - 1e-8);

}  // namespace oracles
}  // namespace advrisk

#endif  // ADVRISK_ORACLES_HPP
