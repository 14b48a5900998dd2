#ifndef ADVRISK_SPECIAL_HPP
#define ADVRISK_SPECIAL_HPP

namespace advrisk {

/// Standard normal density.
double normal_pdf(double x);

/// Standard normal cdf Phi(x), computed through erfc (no table lookups).
double normal_cdf(double x);

/// Upper tail Q(x) = 1 - Phi(x). Satisfies Q(x) + Q(-x) = 1 and Q(0) = 1/2.
double q_tail(double x);

/// Inverse of the standard normal cdf on (0, 1).
/// Rational initial guess polished with one Halley step; accurate to a few ulps
/// away from the extreme tails. Throws std::domain_error outside (0, 1).
double normal_quantile(double p);

}  // namespace advrisk

#endif  // ADVRISK_SPECIAL_HPP
