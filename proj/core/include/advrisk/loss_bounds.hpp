#ifndef ADVRISK_LOSS_BOUNDS_HPP
#define ADVRISK_LOSS_BOUNDS_HPP

#include <optional>

namespace advrisk {

/// Scalar summaries of a continuous-loss problem, supplied by the caller; the
/// library evaluates the bound arithmetic only and never touches models.
struct LossBoundInputs {
  double r0 = 0.0;                            // optimal standard risk
  std::optional<double> grad_dual_norm_exp;   // inf_w E || grad_x loss ||_adv*
  std::optional<double> lipschitz;            // L_x at the standard optimum
  std::optional<double> hessian_min_eig;      // lambda_min of the risk Hessian
  double eps = 0.0;
};

/// r0 + eps * grad_dual_norm_exp (lower bound, convex loss).
double convex_lower_bound(const LossBoundInputs& in);

/// r0 + eps * lipschitz (upper bound, valid for both adversary types).
double lipschitz_upper_bound(const LossBoundInputs& in);

struct DeviationBound {
  double value;
  /// Heuristic validity guard: set when eps * lipschitz > hessian_min_eig,
  /// i.e. outside the small-eps regime the bound assumes.
  bool small_eps_warning;
};

/// sqrt(eps * lipschitz / hessian_min_eig), bounding || w*_eps - w*_0 ||.
DeviationBound deviation_bound(const LossBoundInputs& in);

}  // namespace advrisk

#endif  // ADVRISK_LOSS_BOUNDS_HPP
