#ifndef ADVRISK_DISCRETE_HPP
#define ADVRISK_DISCRETE_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "advrisk/intervals.hpp"
#include "advrisk/measures.hpp"

namespace advrisk {

struct CouplingEntry {
  std::size_t from;  // mu atom index
  std::size_t to;    // nu atom index
  double mass;
  bool admissible;   // d(x_from, y_to) <= 2*eps
};

/// Result of an exact D_eps solve between finite probability measures.
/// `cost` is the optimal value of the transport problem with indicator cost
/// 1{d > 2 eps}; `coupling` is a full coupling whose marginals match the
/// inputs, with the mass moved farther than 2 eps equal to cost. For 1-D
/// inputs `witness` carries a closed set A with mu(A^-eps) - nu(A^eps) = cost,
/// certifying optimality through duality.
struct TransportCertificate {
  double cost = 0.0;
  double eps = 0.0;
  Metric metric = Metric::euclidean;
  std::vector<CouplingEntry> coupling;
  std::optional<std::variant<IntervalSet, Halfspace>> witness;

  double transported_admissible() const;  // mass moved at distance <= 2 eps
  double marginal_error(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu) const;
};

struct DepsilonOptions {
  bool use_prefilter = true;   // coordinate-band edge pruning; never changes results
  bool force_flow = false;     // disable the 1-D sweep engine (for cross-checks)
  bool compute_witness = true; // dual witness extraction (1-D only)
};

/// Exact D_eps between probability measures of equal dimension via a
/// matching/flow reduction: maximize the mass routed along pairs with
/// d(x, y) <= 2 eps; the cost is the mass that cannot be routed. Uniform
/// equal-count inputs use maximum-cardinality bipartite matching, general
/// weights a max-flow, and 1-D inputs a sorted sweep; all agree exactly.
TransportCertificate depsilon_exact(const EmpiricalMeasure& mu,
                                    const EmpiricalMeasure& nu, Metric metric,
                                    double eps, const DepsilonOptions& opts = {});

/// R*_eps = (1 - cost) / 2 for balanced binary classes.
double risk_from_depsilon(double cost);

/// Exact p-Wasserstein distance. 1-D inputs use the sorted quantile coupling
/// for any sizes; higher dimensions use the exact small-instance
/// transportation solve and are capped at `multi_d_cap` atoms per side.
double wasserstein_p(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                     Metric metric, double p, std::size_t multi_d_cap = 64);

/// max(0, (1 - (wp / (2 eps))^p) / 2); requires eps > 0.
double wp_lower_bound(double wp, double eps, double p);

// ---------------------------------------------------------------------------
// Strassen dual gaps mu(A^-eps) - nu(A^eps): certified lower bounds on D_eps
// ---------------------------------------------------------------------------

double strassen_gap(const UnivariateFamily& mu, const UnivariateFamily& nu,
                    const IntervalSet& A, double eps);
double strassen_gap(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                    const IntervalSet& A, double eps);
double strassen_gap(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                    const Halfspace& A, Metric metric, double eps);
/// Euclidean metric (isotropic Gaussians project exactly onto the normal).
double strassen_gap(const IsoGaussian& mu, const IsoGaussian& nu, const Halfspace& A,
                    double eps);

/// Mass of a halfspace under an isotropic Gaussian.
double halfspace_mass(const IsoGaussian& g, const Halfspace& h);
/// Total weight of atoms with normal . x >= offset.
double halfspace_mass(const EmpiricalMeasure& m, const Halfspace& h);

}  // namespace advrisk

#endif  // ADVRISK_DISCRETE_HPP
