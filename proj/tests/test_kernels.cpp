#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gklab/error.hpp"
#include "gklab/kernels.hpp"
#include "oracles.hpp"

using namespace gklab;
using std::numbers::pi;

TEST_SUITE("kernels") {

TEST_CASE("chebyshev nodes") {
  CHECK(chebyshev_nodes(1).thetas == std::vector<double>{pi / 2});
  const auto two = chebyshev_nodes(2);
  CHECK(two.theta(1) == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(two.theta(2) == doctest::Approx(3 * pi / 4).epsilon(1e-15));
  for (int n : {3, 8, 33, 1000}) {
    const auto nodes = chebyshev_nodes(n);
    REQUIRE(nodes.thetas.size() == std::size_t(n));
    for (int k = 1; k <= n; ++k) {
      CHECK(nodes.theta(k) > 0.0);
      CHECK(nodes.theta(k) < pi);
      CHECK(std::abs(nodes.theta(k) + nodes.theta(n + 1 - k) - pi) < 1e-14);
      if (k > 1) CHECK(nodes.theta(k) > nodes.theta(k - 1));
    }
  }
  CHECK_THROWS_AS(chebyshev_nodes(0), Error);
}

TEST_CASE("fundamental polynomial values") {
  for (double t : {0.0, 0.3, 1.0, pi / 2, 2.5, pi, -1.0, 7.0}) {
    CHECK(eval_fundamental(1, 1, t) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(eval_fundamental(2, 1, 0.0) ==
        doctest::Approx((std::sqrt(2.0) + 1) / 2).epsilon(1e-14));
  try {
    eval_fundamental(4, 5, 0.1);
    FAIL("expected an index error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::index_out_of_range);
  }
  CHECK_THROWS_AS(eval_kernel(4, 0, 0.1), Error);
}

TEST_CASE("fundamental polynomial matches product form") {
  for (int n : {1, 2, 5, 16, 31}) {
    for (int k = 1; k <= n; ++k) {
      for (double t = 0.0; t <= pi; t += 0.0173) {
        CHECK(std::abs(eval_fundamental(n, k, t) - oracle::lagrange_basis(n, k, t)) <
              1e-11);
      }
    }
  }
}

TEST_CASE("cardinal property") {
  double worst = 0.0;
  for (int n = 1; n <= 256; n += (n < 40 ? 1 : 37)) {
    const KernelBasis basis(n);
    const auto nodes = chebyshev_nodes(n);
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        worst = std::max(worst, std::abs(basis.fundamental(k, nodes.theta(j)) -
                                         (j == k ? 1.0 : 0.0)));
      }
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("kernel values at n=2") {
  CHECK(eval_kernel(2, 1, pi / 4) ==
        doctest::Approx((2 + std::sqrt(2.0)) / 4).epsilon(1e-14));
  CHECK(eval_kernel(2, 2, pi / 4) ==
        doctest::Approx((2 - std::sqrt(2.0)) / 4).epsilon(1e-14));
}

TEST_CASE("kernel matches product-form oracle") {
  for (int n : {3, 8, 20}) {
    const KernelBasis basis(n);
    for (int k = 1; k <= n; ++k) {
      for (double t = 0.0; t <= pi; t += 0.031) {
        CHECK(std::abs(basis.kernel(k, t) - oracle::kernel(n, k, t)) < 1e-11);
        CHECK(basis.kernel(k, t) == doctest::Approx(eval_kernel(n, k, t)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("partition of unity") {
  const Grid grid = Grid::full(2049);
  for (int n : {1, 2, 3, 7, 64, 255, 1024}) {
    const KernelBasis basis(n);
    std::vector<double> values(static_cast<std::size_t>(n));
    double worst = 0.0;
    for (double t : grid.points()) {
      basis.evaluate(t, KernelKind::grunwald, values);
      double sum = 0.0;
      for (double v : values) sum += v;
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("continuity across the singularity guard") {
  for (int n : {4, 37, 512}) {
    const auto nodes = chebyshev_nodes(n);
    for (int k : {1, n / 2 + 1, n}) {
      const double tk = nodes.theta(k);
      // Offset at which |cos(theta) - cos(theta_k)| reaches the guard.
      const double edge = kSingularityGuard / std::sin(tk);
      for (double scale : {0.0, 0.5, 0.999, 1.001, 2.0, 999.0, 1001.0, 1e4}) {
        for (double t : {tk - scale * edge, tk + scale * edge}) {
          CHECK(std::abs(eval_fundamental(n, k, t) - oracle::lagrange_basis(n, k, t)) < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("endpoint kernels stay accurate inside the guard at large degree") {
  const int n = 65536;
  for (double t : {1e-5, 5e-5, 1e-4, 3e-4}) {
    CHECK(std::abs(eval_fundamental(n, 1, t) - oracle::lagrange_basis(n, 1, t)) < 1e-9);
  }
}

TEST_CASE("kernel symmetry") {
  for (int n : {5, 16, 129}) {
    const KernelBasis basis(n);
    for (int k = 1; k <= n; k += 3) {
      for (double t = 0.0; t <= pi; t += 0.049) {
        CHECK(std::abs(basis.kernel(k, t) - basis.kernel(n + 1 - k, pi - t)) < 1e-10);
      }
    }
  }
}

TEST_CASE("lebesgue function and constants") {
  for (double t : {0.0, 1.0, pi}) {
    CHECK(lebesgue_function(1, t, KernelKind::lagrange) == doctest::Approx(1.0));
    CHECK(lebesgue_function(1, t, KernelKind::grunwald) == doctest::Approx(1.0));
  }
  CHECK(lebesgue_function(2, pi / 4, KernelKind::grunwald) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lebesgue_constant(1, KernelKind::grunwald, Grid::full()) ==
        doctest::Approx(1.0));

  // Brute-force grid sup of the product-form Lebesgue function.
  const Grid grid = Grid::full();
  double brute = 0.0;
  for (double t : grid.points()) {
    double s = 0.0;
    for (int k = 1; k <= 32; ++k) s += std::abs(oracle::lagrange_basis(32, k, t));
    brute = std::max(brute, s);
  }
  const double lam = lebesgue_constant(32, KernelKind::lagrange, grid);
  CHECK(lam == doctest::Approx(brute).epsilon(1e-10));
  const double classical = 2.0 / pi * std::log(32.0) + 0.96;
  CHECK(std::abs(lam / classical - 1.0) < 0.1);
}

}  // TEST_SUITE
