#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>
#include <random>

#include "advrisk/special.hpp"

using namespace advrisk;

namespace {

// Independent quadrature of the standard normal pdf over [x, x + 40] with
// composite Simpson; reference for the tail function.
double q_tail_quadrature(double x) {
  const double hi = x + 40.0;
  const int n = 200000;  // even
  const double h = (hi - x) / n;
  auto pdf = [](double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::acos(-1.0));
  };
  double s = pdf(x) + pdf(hi);
  for (int k = 1; k < n; ++k) {
    s += pdf(x + k * h) * (k % 2 ? 4.0 : 2.0);
  }
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("q_tail basic identities") {
  CHECK(q_tail(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q_tail(std::numeric_limits<double>::infinity()) == 0.0);
  CHECK(q_tail(-std::numeric_limits<double>::infinity()) == 1.0);
  for (double x : {-3.0, -1.0, -0.2, 0.7, 2.5}) {
    CHECK(q_tail(x) + q_tail(-x) == doctest::Approx(1.0).epsilon(1e-15));
  }
  // monotone decreasing
  CHECK(q_tail(1.0) < q_tail(0.5));
}

TEST_CASE("q_tail agrees with normal-pdf quadrature") {
  CHECK(std::abs(q_tail(1.0) - q_tail_quadrature(1.0)) < 1e-12);
  CHECK(std::abs(q_tail(0.3) - q_tail_quadrature(0.3)) < 1e-12);
  CHECK(std::abs(q_tail(2.0) - q_tail_quadrature(2.0)) < 1e-12);
}

TEST_CASE("normal_quantile inverts normal_cdf") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(1e-10, 1.0 - 1e-10);
  for (int it = 0; it < 2000; ++it) {
    double p = u(rng);
    double x = normal_quantile(p);
    CHECK(std::abs(normal_cdf(x) - p) < 1e-14);
  }
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(normal_quantile(-0.1), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(1.5), std::domain_error);
}
