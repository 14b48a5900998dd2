#include "advrisk/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "advrisk/special.hpp"

namespace advrisk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string metric_name(Metric m) {
  return m == Metric::euclidean ? "euclidean" : "chebyshev";
}

Metric metric_from_name(const std::string& name) {
  if (name == "euclidean" || name == "l2") return Metric::euclidean;
  if (name == "chebyshev" || name == "linf") return Metric::chebyshev;
  throw std::invalid_argument("unknown metric: " + name);
}

double distance(Metric m, std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  if (m == Metric::euclidean) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      double d = x[k] - y[k];
      s += d * d;
    }
    return std::sqrt(s);
  }
  double mx = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx = std::max(mx, std::abs(x[k] - y[k]));
  }
  return mx;
}

bool within(Metric m, std::span<const double> x, std::span<const double> y, double r) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("within: dimension mismatch");
  }
  if (m == Metric::euclidean) {
    double s = 0.0;
    double r2 = r * r;
    for (std::size_t k = 0; k < x.size(); ++k) {
      double d = x[k] - y[k];
      s += d * d;
      if (s > r2) return false;
    }
    return s <= r2;
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (std::abs(x[k] - y[k]) > r) return false;
  }
  return true;
}

bool Halfspace::is_constant() const {
  return std::all_of(normal.begin(), normal.end(), [](double w) { return w == 0.0; });
}

std::string Halfspace::to_string() const {
  std::ostringstream os;
  os << "halfspace w=(";
  for (std::size_t k = 0; k < normal.size(); ++k) {
    if (k) os << ' ';
    os << normal[k];
  }
  os << ") b=" << offset;
  return os.str();
}

// ---------------------------------------------------------------------------
// EmpiricalMeasure
// ---------------------------------------------------------------------------

EmpiricalMeasure::EmpiricalMeasure(std::vector<double> flat_points, std::size_t dim,
                                   std::vector<double> weights)
    : data_(std::move(flat_points)), weights_(std::move(weights)), dim_(dim) {
  if (dim_ == 0) throw std::invalid_argument("EmpiricalMeasure: dim must be positive");
  if (data_.size() != weights_.size() * dim_) {
    throw std::invalid_argument("EmpiricalMeasure: point/weight count mismatch");
  }
  total_mass_ = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("EmpiricalMeasure: weights must be finite and >= 0");
    }
    total_mass_ += w;
  }
  for (double v : data_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("EmpiricalMeasure: points must be finite");
    }
  }
}

EmpiricalMeasure EmpiricalMeasure::uniform(std::vector<double> flat_points,
                                           std::size_t dim) {
  if (dim == 0 || flat_points.size() % dim != 0) {
    throw std::invalid_argument("EmpiricalMeasure::uniform: bad flat size");
  }
  std::size_t n = flat_points.size() / dim;
  if (n == 0) throw std::invalid_argument("EmpiricalMeasure::uniform: empty");
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  return EmpiricalMeasure(std::move(flat_points), dim, std::move(w));
}

EmpiricalMeasure EmpiricalMeasure::from_points(
    const std::vector<std::vector<double>>& pts) {
  if (pts.empty()) throw std::invalid_argument("EmpiricalMeasure::from_points: empty");
  std::size_t d = pts.front().size();
  std::vector<double> flat;
  flat.reserve(pts.size() * d);
  for (const auto& p : pts) {
    if (p.size() != d) {
      throw std::invalid_argument("EmpiricalMeasure::from_points: ragged rows");
    }
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return uniform(std::move(flat), d);
}

EmpiricalMeasure EmpiricalMeasure::point_mass(std::vector<double> x) {
  std::size_t d = x.size();
  return EmpiricalMeasure(std::move(x), d, {1.0});
}

bool EmpiricalMeasure::is_probability(double tol) const {
  return std::abs(total_mass_ - 1.0) <= tol;
}

bool EmpiricalMeasure::uniform_weights() const {
  if (weights_.empty()) return true;
  double w0 = weights_.front();
  return std::all_of(weights_.begin(), weights_.end(),
                     [w0](double w) { return w == w0; });
}

// ---------------------------------------------------------------------------
// UnivariateFamily
// ---------------------------------------------------------------------------

UnivariateFamily UnivariateFamily::gaussian(double mu, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(mu)) {
    throw std::invalid_argument("gaussian: sigma must be positive and finite");
  }
  return UnivariateFamily(Gaussian{mu, sigma});
}

UnivariateFamily UnivariateFamily::uniform(double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("uniform: need finite a < b");
  }
  return UnivariateFamily(Uniform{a, b});
}

UnivariateFamily UnivariateFamily::triangular(double center, double halfwidth) {
  if (!(halfwidth > 0.0) || !std::isfinite(halfwidth) || !std::isfinite(center)) {
    throw std::invalid_argument("triangular: halfwidth must be positive and finite");
  }
  return UnivariateFamily(Triangular{center, halfwidth});
}

double UnivariateFamily::pdf(double x) const {
  return std::visit(
      [x](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          return normal_pdf((x - p.mu) / p.sigma) / p.sigma;
        } else if constexpr (std::is_same_v<T, Uniform>) {
          return (x >= p.a && x <= p.b) ? 1.0 / (p.b - p.a) : 0.0;
        } else {
          double t = std::abs(x - p.center);
          if (t >= p.halfwidth) return 0.0;
          return (p.halfwidth - t) / (p.halfwidth * p.halfwidth);
        }
      },
      params_);
}

double UnivariateFamily::cdf(double x) const {
  if (x == kInf) return 1.0;
  if (x == -kInf) return 0.0;
  return std::visit(
      [x](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          return normal_cdf((x - p.mu) / p.sigma);
        } else if constexpr (std::is_same_v<T, Uniform>) {
          if (x <= p.a) return 0.0;
          if (x >= p.b) return 1.0;
          return (x - p.a) / (p.b - p.a);
        } else {
          double lo = p.center - p.halfwidth;
          double hi = p.center + p.halfwidth;
          if (x <= lo) return 0.0;
          if (x >= hi) return 1.0;
          double h2 = 2.0 * p.halfwidth * p.halfwidth;
          if (x <= p.center) {
            double t = x - lo;
            return t * t / h2;
          }
          double t = hi - x;
          return 1.0 - t * t / h2;
        }
      },
      params_);
}

double UnivariateFamily::quantile(double t) const {
  if (std::isnan(t) || t < 0.0 || t > 1.0) {
    throw std::domain_error("quantile: argument outside [0, 1]");
  }
  return std::visit(
      [t](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          return p.mu + p.sigma * normal_quantile(t);
        } else if constexpr (std::is_same_v<T, Uniform>) {
          return p.a + t * (p.b - p.a);
        } else {
          if (t <= 0.5) {
            return p.center - p.halfwidth + p.halfwidth * std::sqrt(2.0 * t);
          }
          return p.center + p.halfwidth - p.halfwidth * std::sqrt(2.0 * (1.0 - t));
        }
      },
      params_);
}

double UnivariateFamily::mass(double lo, double hi) const {
  if (!(lo <= hi)) return 0.0;
  if (const auto* g = std::get_if<Gaussian>(&params_)) {
    // Tail-safe evaluation: express through Q on the side away from the mean
    // to avoid cancellation for far intervals.
    double zl = (lo - g->mu) / g->sigma;
    double zh = (hi - g->mu) / g->sigma;
    double m;
    if (zl >= 0.0) {
      m = q_tail(zl) - q_tail(zh);
    } else if (zh <= 0.0) {
      m = q_tail(-zh) - q_tail(-zl);
    } else {
      m = (0.5 - q_tail(-zl)) + (0.5 - q_tail(zh));
    }
    return std::max(0.0, m);
  }
  return std::max(0.0, cdf(hi) - cdf(lo));
}

double UnivariateFamily::support_lo() const {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          return -kInf;
        } else if constexpr (std::is_same_v<T, Uniform>) {
          return p.a;
        } else {
          return p.center - p.halfwidth;
        }
      },
      params_);
}

double UnivariateFamily::support_hi() const {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          return kInf;
        } else if constexpr (std::is_same_v<T, Uniform>) {
          return p.b;
        } else {
          return p.center + p.halfwidth;
        }
      },
      params_);
}

std::string UnivariateFamily::describe() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          os << "gaussian(mu=" << p.mu << ", sigma=" << p.sigma << ")";
        } else if constexpr (std::is_same_v<T, Uniform>) {
          os << "uniform[" << p.a << ", " << p.b << "]";
        } else {
          os << "triangular(center=" << p.center << ", halfwidth=" << p.halfwidth
             << ")";
        }
      },
      params_);
  return os.str();
}

}  // namespace advrisk
