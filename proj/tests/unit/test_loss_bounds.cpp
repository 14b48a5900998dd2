#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "advrisk/loss_bounds.hpp"

using namespace advrisk;

TEST_CASE("convex lower bound") {
  LossBoundInputs in;
  in.r0 = 0.1;
  in.grad_dual_norm_exp = 2.0;
  in.eps = 0.0;
  CHECK(convex_lower_bound(in) == 0.1);
  in.eps = 0.05;
  CHECK(convex_lower_bound(in) == doctest::Approx(0.2).epsilon(1e-15));
  in.grad_dual_norm_exp = 0.0;
  CHECK(convex_lower_bound(in) == 0.1);
  in.grad_dual_norm_exp.reset();
  CHECK_THROWS_AS(convex_lower_bound(in), std::invalid_argument);
}

TEST_CASE("lipschitz upper bound") {
  LossBoundInputs in;
  in.r0 = 0.1;
  in.lipschitz = 3.0;
  in.eps = 0.0;
  CHECK(lipschitz_upper_bound(in) == 0.1);
  in.eps = 0.1;
  CHECK(lipschitz_upper_bound(in) == doctest::Approx(0.4).epsilon(1e-15));
  in.lipschitz.reset();
  CHECK_THROWS_AS(lipschitz_upper_bound(in), std::invalid_argument);
}

TEST_CASE("lower never exceeds upper when grad expectation <= lipschitz") {
  for (double eps : {0.0, 0.01, 0.5, 2.0}) {
    for (double g : {0.0, 0.5, 1.0}) {
      for (double L : {1.0, 2.0}) {
        LossBoundInputs in;
        in.r0 = 0.2;
        in.grad_dual_norm_exp = g;
        in.lipschitz = L;
        in.eps = eps;
        CHECK(convex_lower_bound(in) <= lipschitz_upper_bound(in) + 1e-15);
      }
    }
  }
}

TEST_CASE("deviation bound and validity flag") {
  LossBoundInputs in;
  in.lipschitz = 1.0;
  in.hessian_min_eig = 4.0;
  in.eps = 0.0;
  CHECK(deviation_bound(in).value == 0.0);
  in.eps = 0.04;
  auto d = deviation_bound(in);
  CHECK(d.value == doctest::Approx(0.1).epsilon(1e-15));
  CHECK_FALSE(d.small_eps_warning);

  // sqrt scaling: doubling eps multiplies by sqrt(2)
  LossBoundInputs in2 = in;
  in2.eps = 0.08;
  CHECK(deviation_bound(in2).value ==
        doctest::Approx(d.value * std::sqrt(2.0)).epsilon(1e-12));

  // guard trips when eps * L exceeds the curvature
  LossBoundInputs in3 = in;
  in3.eps = 5.0;
  CHECK(deviation_bound(in3).small_eps_warning);

  in3.hessian_min_eig = 0.0;
  CHECK_THROWS_AS(deviation_bound(in3), std::invalid_argument);
}

TEST_CASE("all outputs nondecreasing in eps") {
  LossBoundInputs in;
  in.r0 = 0.3;
  in.grad_dual_norm_exp = 1.5;
  in.lipschitz = 2.5;
  in.hessian_min_eig = 1.0;
  double pl = -1.0, pu = -1.0, pd = -1.0;
  for (double eps : {0.0, 0.1, 0.2, 0.5, 1.0}) {
    in.eps = eps;
    double l = convex_lower_bound(in);
    double u = lipschitz_upper_bound(in);
    double dv = deviation_bound(in).value;
    CHECK(l >= pl);
    CHECK(u >= pu);
    CHECK(dv >= pd);
    pl = l;
    pu = u;
    pd = dv;
  }
}
