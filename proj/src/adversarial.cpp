#include "gklab/adversarial.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gklab/error.hpp"
#include "gklab/kernels.hpp"
#include "gklab/operators.hpp"

namespace gklab {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double c_n_constant(int n, const QuadratureSpec& quad) {
  const NodeSet nodes = chebyshev_nodes(n);
  const double shift = kPi / (2.0 * n);
  const double tn = nodes.theta(n);
  auto g = [n, shift](double t) {
    return eval_fundamental(n, n, t - shift) + eval_fundamental(n, n, t + shift);
  };
  const std::vector<double> cuts{tn - shift, tn, tn + shift};
  return integrate_abs_power(g, 0.0, kPi, 1.0, 64 * n, cuts, quad);
}

double HatFunction::operator()(double theta) const {
  const double d = std::abs(theta - peak);
  return d >= half_width ? 0.0 : m * (1.0 - d / half_width);
}

double HatFunction::l1_norm() const { return m * half_width; }

FunctionSpec HatFunction::as_function() const {
  FunctionSpec f;
  f.name = "hat_n" + std::to_string(n) + "_m" + std::to_string(m);
  const HatFunction self = *this;
  f.evaluator = [self](double t) { return self(t); };
  f.breakpoints = {peak - half_width, peak, peak + half_width};
  f.smoothness = Smoothness::lipschitz;
  f.lipschitz_constant = m / half_width;
  f.antiderivative = [self](double t) {
    const double lo = self.peak - self.half_width;
    const double hi = self.peak + self.half_width;
    if (t <= lo) return 0.0;
    if (t >= hi) return self.l1_norm();
    if (t <= self.peak) {
      const double s = t - lo;
      return 0.5 * self.m * s * s / self.half_width;
    }
    const double s = hi - t;
    return self.l1_norm() - 0.5 * self.m * s * s / self.half_width;
  };
  return f;
}

HatFunction build_hat(int n, double m, const QuadratureSpec& quad) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw Error(ErrorCode::invalid_argument, "hat height must be positive");
  }
  const double c_n = c_n_constant(n, quad);
  HatFunction hat;
  hat.n = n;
  hat.m = m;
  hat.peak = chebyshev_nodes(n).theta(n);
  int N = 1;
  while (!(std::ldexp(1.0, -N) < c_n / m &&
           std::ldexp(1.0, -(N + 1)) <= kPi / (2.0 * n))) {
    ++N;
  }
  hat.N = N;
  hat.half_width = std::ldexp(1.0, -(N + 1));
  return hat;
}

BlowUp l1_blowup(int n, double m, const QuadratureSpec& quad) {
  const HatFunction hat = build_hat(n, m, quad);
  const FunctionSpec f = hat.as_function();
  const NodeSet nodes = chebyshev_nodes(n);

  BlowUp out;
  out.n = n;
  out.m = m;
  out.N = hat.N;
  out.c_n = c_n_constant(n, quad);
  out.fnorm = hat.l1_norm();
  out.gnorm = lp_norm(grunwald_operator(nodes, f).as_function("G f"), 1.0, 0.0,
                      kPi, {}, quad);
  out.ratio = out.gnorm / out.fnorm;
  const double gk = lp_norm(gk_operator(nodes, f, quad).as_function("GK f"),
                            1.0, 0.0, kPi, {}, quad);
  out.gk_ratio = gk / out.fnorm;
  return out;
}

}  // namespace gklab
