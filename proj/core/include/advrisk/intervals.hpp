#ifndef ADVRISK_INTERVALS_HPP
#define ADVRISK_INTERVALS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "advrisk/measures.hpp"

namespace advrisk {

struct Interval {
  double lo;
  double hi;

  bool operator==(const Interval&) const = default;
};

/// Finite union of closed intervals on the extended real line, kept sorted,
/// disjoint and non-touching (touching or overlapping pieces merge on
/// construction). Degenerate single-point intervals are valid closed sets and
/// are preserved. All operations are pure.
class IntervalSet {
 public:
  IntervalSet() = default;  // empty set
  explicit IntervalSet(std::vector<Interval> pieces);

  static IntervalSet empty_set() { return IntervalSet(); }
  static IntervalSet whole_line();
  static IntervalSet of(double lo, double hi);

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool is_empty() const { return pieces_.empty(); }
  bool is_whole_line() const;
  std::size_t count() const { return pieces_.size(); }

  bool contains_point(double x) const;
  /// Exact subset test on interval endpoints.
  bool contains(const IntervalSet& other) const;
  bool operator==(const IntervalSet& other) const = default;

  /// Epsilon-expansion: every piece widened by eps on both sides, then merged.
  IntervalSet expand(double eps) const;
  /// Epsilon-thinning ((A^c)^eps)^c, computed per piece: [lo+eps, hi-eps],
  /// pieces shorter than 2*eps vanish, length exactly 2*eps leaves a point.
  IntervalSet thin(double eps) const;
  /// Closed complement; shared boundary points appear on both sides
  /// (measure-zero overlap, harmless for every downstream mass computation).
  IntervalSet complement() const;

  /// Mass of the set under a univariate family (sum of cdf increments).
  double mass(const UnivariateFamily& f) const;
  /// Total weight of the 1-D empirical atoms lying in the set.
  double empirical_mass(const EmpiricalMeasure& m) const;

  /// Textual form: comma-separated `lo..hi` atoms with -inf/inf keywords,
  /// e.g. "-inf..-1.2,0.7..inf"; the empty set prints as "empty".
  std::string to_string() const;
  static IntervalSet parse(std::string_view text);

 private:
  std::vector<Interval> pieces_;
};

/// Adversarial 0-1 risk of the interval classifier that decides class 1 on A:
///   (p0(A^eps) + p1((A^c)^eps)) / 2   with equal priors.
double classifier_risk(const UnivariateFamily& class0, const UnivariateFamily& class1,
                       const IntervalSet& decide1, double eps);

}  // namespace advrisk

#endif  // ADVRISK_INTERVALS_HPP
