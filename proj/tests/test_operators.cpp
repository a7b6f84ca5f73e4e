#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "gklab/corpus.hpp"
#include "gklab/error.hpp"
#include "gklab/kernels.hpp"
#include "gklab/operators.hpp"
#include "oracles.hpp"

using namespace gklab;
using std::numbers::pi;

namespace {

FunctionSpec constant(double c) {
  FunctionSpec f;
  f.name = "constant";
  f.evaluator = [c](double) { return c; };
  return f;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("lagrange operator") {
  for (int n : {1, 4, 17}) {
    const auto nodes = chebyshev_nodes(n);
    for (double t : {0.0, 0.4, 2.0, pi}) {
      CHECK(lagrange_apply(nodes, constant(5.0), t) == doctest::Approx(5.0).epsilon(1e-13));
      if (n >= 2) {
        CHECK(std::abs(lagrange_apply(nodes, corpus_get("cosine"), t) - std::cos(t)) < 1e-10);
      }
    }
    const auto f = corpus_get("square");
    for (int j = 1; j <= n; ++j) {
      CHECK(lagrange_apply(nodes, f, nodes.theta(j)) ==
            doctest::Approx(f(nodes.theta(j))).epsilon(1e-12));
    }
  }
}

TEST_CASE("grunwald operator") {
  const auto f = corpus_get("square");
  const auto one = chebyshev_nodes(1);
  for (double t : {0.0, 1.0, pi}) {
    CHECK(grunwald_apply(one, f, t) == doctest::Approx(f(pi / 2)));
    CHECK(grunwald_apply(chebyshev_nodes(9), constant(-2.0), t) ==
          doctest::Approx(-2.0).epsilon(1e-13));
  }
  // Nodal values are weighted, not reproduced.
  const auto two = chebyshev_nodes(2);
  const double expected = (2 + std::sqrt(2.0)) / 4 * f(pi / 4) + (2 - std::sqrt(2.0)) / 4 * f(3 * pi / 4);
  CHECK(grunwald_apply(two, f, two.theta(1)) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(grunwald_apply(two, f, two.theta(1)) != doctest::Approx(f(pi / 4)));
}

TEST_CASE("kantorovich means") {
  for (int n : {1, 3, 64}) {
    const auto nodes = chebyshev_nodes(n);
    const auto ones = kantorovich_means(nodes, corpus_get("const_one"));
    CHECK(ones.a.size() == std::size_t(n));
    for (double a : ones.a) CHECK(std::abs(a - 1.0) <= 1e-12);
    const auto lin = kantorovich_means(nodes, corpus_get("linear"));
    for (int k = 1; k <= n; ++k) {
      CHECK(lin.a[std::size_t(k - 1)] ==
            doctest::Approx(nodes.theta(k) + pi / (4 * n)).epsilon(1e-13));
    }
  }
  CHECK(kantorovich_means(chebyshev_nodes(1), corpus_get("linear")).a[0] ==
        doctest::Approx(3 * pi / 4).epsilon(1e-14));
}

TEST_CASE("non-integrable panel names the offending k") {
  const auto nodes = chebyshev_nodes(4);
  const double c = nodes.theta(3) + 0.1;
  FunctionSpec f;
  f.name = "pole";
  f.evaluator = [c](double t) { return 1.0 / std::abs(t - c); };
  f.breakpoints = {c};
  f.singularities = {c};
  try {
    kantorovich_means(nodes, f);
    FAIL("expected a quadrature failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::quadrature_failure);
    CHECK(std::string(e.what()).find("k=3") != std::string::npos);
  }
}

TEST_CASE("gk operator") {
  for (int n : {1, 5, 128}) {
    const auto nodes = chebyshev_nodes(n);
    for (double t : {0.0, 0.9, 2.2, pi}) {
      CHECK(std::abs(gk_apply(nodes, corpus_get("const_one"), t) - 1.0) <= 1e-10);
    }
  }
  const auto one = chebyshev_nodes(1);
  const auto f = corpus_get("kink");
  const double mean = 2.0 / pi * integrate(f, pi / 2, pi);
  for (double t : {0.0, 1.3, pi}) {
    CHECK(gk_apply(one, f, t) == doctest::Approx(mean));
    CHECK(gk_apply(one, corpus_get("linear"), t) == doctest::Approx(3 * pi / 4));
  }
  CHECK_THROWS_AS(gk_apply(one, f, -0.1), Error);
  CHECK_THROWS_AS(gk_apply(one, f, pi + 1e-9), Error);
}

TEST_CASE("gk against an independent oracle") {
  const int n = 12;
  const auto f = corpus_get("step");
  const auto gk = gk_operator(chebyshev_nodes(n), f);
  for (double t = 0.0; t <= pi; t += 0.1) {
    double ref = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double lo = oracle::node(n, k);
      const double hi = lo + pi / (2 * n);
      const double mass = std::max(0.0, std::min(hi, pi / 2) - lo);
      ref += mass * 2 * n / pi * oracle::kernel(n, k, t);
    }
    CHECK(gk(t) == doctest::Approx(ref).epsilon(1e-11));
  }
}

TEST_CASE("linearity") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const auto names = corpus_names();
  for (int trial = 0; trial < 6; ++trial) {
    const auto f = corpus_get(names[std::size_t(trial) % 5 + 1]);
    const auto g = corpus_get(trial % 2 ? "step" : "kink");
    const double alpha = u(rng), beta = u(rng);
    FunctionSpec h = derive(f, "mix", [&](double t) { return alpha * f(t) + beta * g(t); });
    h.breakpoints.insert(h.breakpoints.end(), g.breakpoints.begin(), g.breakpoints.end());
    std::sort(h.breakpoints.begin(), h.breakpoints.end());
    const auto nodes = chebyshev_nodes(24);
    const auto gf = gk_operator(nodes, f), gg = gk_operator(nodes, g), gh = gk_operator(nodes, h);
    for (double t = 0.0; t <= pi; t += 0.05) {
      CHECK(std::abs(gh(t) - (alpha * gf(t) + beta * gg(t))) < 1e-10);
    }
  }
}

TEST_CASE("uniform boundedness by the lebesgue constant") {
  const Grid grid = Grid::full(2049);
  for (int n : {8, 64, 256}) {
    const double lam = lebesgue_constant(n, KernelKind::grunwald, grid);
    for (const char* name : {"sine", "kink", "step", "hat_narrow", "rough"}) {
      const auto f = corpus_get(name);
      const auto values = gk_operator(chebyshev_nodes(n), f).apply(grid);
      CHECK(sup_norm(values) <= lam * sup_norm(f, Grid::full()) * (1 + 1e-12));
    }
  }
}

TEST_CASE("means are consistent with a piecewise-constant input") {
  const int n = 10;
  const auto nodes = chebyshev_nodes(n);
  const auto means = kantorovich_means(nodes, corpus_get("sine"));
  FunctionSpec pc;
  pc.name = "panels";
  pc.evaluator = [&](double t) {
    for (int k = 1; k <= n; ++k) {
      if (t >= nodes.theta(k) && t < nodes.theta(k) + pi / (2 * n)) return means.a[std::size_t(k - 1)];
    }
    return 0.0;
  };
  for (int k = 1; k <= n; ++k) {
    pc.breakpoints.push_back(nodes.theta(k));
    pc.breakpoints.push_back(std::min(nodes.theta(k) + pi / (2 * n), pi));
  }
  std::sort(pc.breakpoints.begin(), pc.breakpoints.end());
  pc.breakpoints.erase(std::unique(pc.breakpoints.begin(), pc.breakpoints.end()), pc.breakpoints.end());
  const auto lhs = gk_operator(nodes, pc);
  const KernelExpansion rhs(n, means.a, KernelKind::grunwald);
  for (double t = 0.0; t <= pi; t += 0.07) CHECK(lhs(t) == doctest::Approx(rhs(t)).epsilon(1e-13));
}

TEST_CASE("sup error decreases over octaves") {
  const Grid grid = Grid::full(4097);
  auto sup_error = [&](const FunctionSpec& f, const std::vector<double>& exact, int n) {
    const auto values = gk_operator(chebyshev_nodes(n), f).apply(grid);
    double err = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) err = std::max(err, std::abs(values[i] - exact[i]));
    return err;
  };
  for (const char* name : {"sine", "kink", "rough"}) {
    const auto f = corpus_get(name);
    const auto exact = sample(f, grid);
    double prev = INFINITY;
    for (int n = 8; n <= 512; n *= 2) {
      const double err = sup_error(f, exact, n);
      CHECK(err <= 1.1 * prev);
      prev = err;
    }
  }
  // The narrow hat is only resolved once a panel is shorter than its width.
  const auto hat = corpus_get("hat_narrow");
  const auto exact = sample(hat, grid);
  double prev = INFINITY;
  double first = 0.0;
  for (int n = 32; n <= 512; n *= 2) {
    const double err = sup_error(hat, exact, n);
    if (n == 32) first = err;
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 0.1 * first);
}

TEST_CASE("korovkin probe") {
  const auto p16 = korovkin_probe(16, Grid::full(2049));
  const auto p256 = korovkin_probe(256, Grid::full(2049));
  CHECK(p16.e0 <= 1e-10);
  CHECK(p256.e0 <= 1e-10);
  CHECK(p256.e1 < p16.e1);
  CHECK(p256.e2 < p16.e2);
}

}  // TEST_SUITE
