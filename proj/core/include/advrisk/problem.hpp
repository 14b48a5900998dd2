#ifndef ADVRISK_PROBLEM_HPP
#define ADVRISK_PROBLEM_HPP

#include <variant>

#include "advrisk/intervals.hpp"
#include "advrisk/measures.hpp"
#include "advrisk/mixture.hpp"

namespace advrisk {

using ClassDistribution =
    std::variant<UnivariateFamily, IsoGaussian, EmpiricalMeasure, MixtureSpec>;

/// Two class-conditional distributions with fixed equal priors.
struct BinaryProblem {
  ClassDistribution class0;
  ClassDistribution class1;
};

/// Interval-classifier risk; requires both classes univariate (throws
/// std::invalid_argument otherwise).
double classifier_risk(const BinaryProblem& problem, const IntervalSet& decide1,
                       double eps);

}  // namespace advrisk

#endif  // ADVRISK_PROBLEM_HPP
