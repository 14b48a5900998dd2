#ifndef ADVRISK_MEASURES_HPP
#define ADVRISK_MEASURES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace advrisk {

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

enum class Metric { euclidean, chebyshev };

std::string metric_name(Metric m);
Metric metric_from_name(const std::string& name);

/// Distance between two points of equal dimension. Throws std::invalid_argument
/// on a dimension mismatch.
double distance(Metric m, std::span<const double> x, std::span<const double> y);

/// d(x, y) <= r with the threshold compared exactly (squared form for the
/// euclidean metric, so ties at r are admissible without sqrt rounding).
bool within(Metric m, std::span<const double> x, std::span<const double> y, double r);

// ---------------------------------------------------------------------------
// Halfspace classifier region {x : normal . x >= offset}
// ---------------------------------------------------------------------------

struct Halfspace {
  std::vector<double> normal;
  double offset = 0.0;

  /// All-zero normal encodes a constant classifier: the whole space when
  /// offset <= 0, the empty set otherwise.
  bool is_constant() const;
  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// EmpiricalMeasure: weighted point cloud, possibly sub-probability
// ---------------------------------------------------------------------------

/// Finite positive measure on R^d given by atoms with nonnegative weights.
/// Weights are stored unnormalized; probability status is a query, not an
/// invariant, because restriction measures carry partial mass.
class EmpiricalMeasure {
 public:
  EmpiricalMeasure() = default;
  EmpiricalMeasure(std::vector<double> flat_points, std::size_t dim,
                   std::vector<double> weights);

  static EmpiricalMeasure uniform(std::vector<double> flat_points, std::size_t dim);
  static EmpiricalMeasure from_points(const std::vector<std::vector<double>>& pts);
  static EmpiricalMeasure point_mass(std::vector<double> x);

  std::size_t size() const { return weights_.size(); }
  std::size_t dim() const { return dim_; }
  bool empty() const { return weights_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  double coord(std::size_t i, std::size_t k) const { return data_[i * dim_ + k]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& flat() const { return data_; }

  double total_mass() const { return total_mass_; }
  bool is_probability(double tol = 1e-12) const;
  bool uniform_weights() const;

 private:
  std::vector<double> data_;     // row-major, size() * dim()
  std::vector<double> weights_;  // nonnegative
  std::size_t dim_ = 0;
  double total_mass_ = 0.0;
};

// ---------------------------------------------------------------------------
// Univariate parametric families
// ---------------------------------------------------------------------------

class UnivariateFamily {
 public:
  struct Gaussian {
    double mu;
    double sigma;  // > 0
  };
  struct Uniform {
    double a;
    double b;  // a < b
  };
  struct Triangular {
    double center;
    double halfwidth;  // > 0; support [center - halfwidth, center + halfwidth]
  };
  using Params = std::variant<Gaussian, Uniform, Triangular>;

  static UnivariateFamily gaussian(double mu, double sigma);
  static UnivariateFamily uniform(double a, double b);
  static UnivariateFamily triangular(double center, double halfwidth);

  double pdf(double x) const;
  double cdf(double x) const;
  /// Generalized inverse cdf, F^{-1}(t) = inf{x : F(x) >= t}. Throws
  /// std::domain_error outside [0, 1].
  double quantile(double t) const;
  /// cdf(hi) - cdf(lo), clamped at 0; lo/hi may be +-inf.
  double mass(double lo, double hi) const;

  double support_lo() const;  // -inf for Gaussian
  double support_hi() const;

  const Params& params() const { return params_; }
  std::string describe() const;

 private:
  explicit UnivariateFamily(Params p) : params_(p) {}
  Params params_;
};

// ---------------------------------------------------------------------------
// Isotropic multivariate Gaussian N(mu, sigma^2 I_d)
// ---------------------------------------------------------------------------

struct IsoGaussian {
  std::vector<double> mu;
  double sigma = 1.0;

  std::size_t dim() const { return mu.size(); }
};

}  // namespace advrisk

#endif  // ADVRISK_MEASURES_HPP
