#include "advrisk/loss_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace advrisk {

namespace {
void validate_common(const LossBoundInputs& in) {
  if (!(in.r0 >= 0.0)) throw std::invalid_argument("loss bounds: r0 must be >= 0");
  if (!(in.eps >= 0.0)) throw std::invalid_argument("loss bounds: eps must be >= 0");
}
}  // namespace

double convex_lower_bound(const LossBoundInputs& in) {
  validate_common(in);
  if (!in.grad_dual_norm_exp || !(*in.grad_dual_norm_exp >= 0.0)) {
    throw std::invalid_argument("convex_lower_bound: grad_dual_norm_exp missing");
  }
  return in.r0 + in.eps * *in.grad_dual_norm_exp;
}

double lipschitz_upper_bound(const LossBoundInputs& in) {
  validate_common(in);
  if (!in.lipschitz || !(*in.lipschitz >= 0.0)) {
    throw std::invalid_argument("lipschitz_upper_bound: lipschitz missing");
  }
  return in.r0 + in.eps * *in.lipschitz;
}

DeviationBound deviation_bound(const LossBoundInputs& in) {
  validate_common(in);
  if (!in.lipschitz || !(*in.lipschitz >= 0.0)) {
    throw std::invalid_argument("deviation_bound: lipschitz missing");
  }
  if (!in.hessian_min_eig || !(*in.hessian_min_eig > 0.0)) {
    throw std::invalid_argument("deviation_bound: hessian_min_eig must be positive");
  }
  double value = std::sqrt(in.eps * *in.lipschitz / *in.hessian_min_eig);
  bool warn = in.eps * *in.lipschitz > *in.hessian_min_eig;
  return {value, warn};
}

}  // namespace advrisk
