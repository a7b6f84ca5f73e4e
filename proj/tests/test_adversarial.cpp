#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gklab/adversarial.hpp"
#include "gklab/error.hpp"
#include "gklab/analysis.hpp"
#include "gklab/kernels.hpp"
#include "oracles.hpp"

using namespace gklab;
using std::numbers::pi;

TEST_SUITE("adversarial") {

TEST_CASE("C_n") {
  CHECK(c_n_constant(1) == doctest::Approx(2 * pi).epsilon(1e-8));
  const int n = 8;
  const double s = pi / (2 * n);
  const double riemann = oracle::midpoint([&](double t) {
    return std::abs(oracle::lagrange_basis(n, n, t - s) + oracle::lagrange_basis(n, n, t + s));
  }, 0.0, pi, 1000000);
  CHECK(c_n_constant(n) == doctest::Approx(riemann).epsilon(1e-6));
  for (int m : {2, 5, 16, 40}) {
    CHECK(c_n_constant(m) == doctest::Approx(2 * prop_norm_ii(m, m, 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("hat construction") {
  for (int n : {2, 4, 8, 16}) {
    for (double m : {2.0, 10.0, 100.0}) {
      const HatFunction hat = build_hat(n, m);
      const auto nodes = chebyshev_nodes(n);
      CHECK(hat.peak == nodes.theta(n));
      CHECK(hat(nodes.theta(n)) == m);
      for (int k = 1; k < n; ++k) CHECK(hat(nodes.theta(k)) == 0.0);
      CHECK(hat.peak - hat.half_width >= 0.0);
      CHECK(hat.peak + hat.half_width <= pi);
      CHECK(hat.half_width <= pi / (2 * n));
      CHECK(std::ldexp(1.0, -hat.N) < c_n_constant(n) / m);
      // N is minimal.
      if (hat.N > 1) {
        const int smaller = hat.N - 1;
        CHECK_FALSE((std::ldexp(1.0, -smaller) < c_n_constant(n) / m &&
                     std::ldexp(1.0, -(smaller + 1)) <= pi / (2 * n)));
      }
      CHECK(hat.l1_norm() == m * std::ldexp(1.0, -(hat.N + 1)));
      CHECK(std::abs(integrate(hat.as_function(), 0.0, pi) - hat.l1_norm()) <= 1e-12 * m);
    }
  }
  CHECK_THROWS_AS(build_hat(4, 0.0), Error);
}

TEST_CASE("l1 blow-up") {
  for (int n : {2, 4, 8, 16}) {
    double prev = 0.0;
    for (double m : {1.0, 2.0, 10.0, 100.0}) {
      const BlowUp b = l1_blowup(n, m);
      CHECK(b.gnorm == doctest::Approx(m * b.c_n / 2).epsilon(0.005));
      CHECK(b.ratio == doctest::Approx(b.c_n * std::ldexp(1.0, b.N)).epsilon(0.005));
      if (m > 1.0) CHECK(b.ratio > m);
      CHECK(b.ratio >= prev);
      CHECK(b.gk_ratio <= gk_l1_operator_norm(n) * (1 + 1e-9));
      prev = b.ratio;
    }
  }
  CHECK(l1_blowup(8, 10).ratio > 10);
}

}  // TEST_SUITE
