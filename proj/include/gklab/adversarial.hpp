#pragma once

#include "gklab/corpus.hpp"
#include "gklab/numerics.hpp"

namespace gklab {

/// C_n = int_0^pi |P_n(theta - pi/2n) + P_n(theta + pi/2n)| dtheta.
double c_n_constant(int n, const QuadratureSpec& quad = {});

/// Piecewise-linear hat of height m centred on the last node theta_n, with
/// half-width 2^{-(N+1)}. No other node lies in its support.
struct HatFunction {
  int n = 0;
  double m = 0.0;
  int N = 0;
  double peak = 0.0;
  double half_width = 0.0;

  double operator()(double theta) const;
  /// Exact L1 norm, m * 2^{-(N+1)}.
  double l1_norm() const;
  FunctionSpec as_function() const;
};

/// N is the smallest positive integer with 2^{-N} < C_n/m and
/// 2^{-(N+1)} <= pi/(2n).
HatFunction build_hat(int n, double m, const QuadratureSpec& quad = {});

struct BlowUp {
  int n = 0;
  double m = 0.0;
  int N = 0;
  double c_n = 0.0;
  double ratio = 0.0;     // gnorm / fnorm
  double gnorm = 0.0;     // ||G_n f||_1
  double fnorm = 0.0;     // ||f||_1
  double gk_ratio = 0.0;  // ||GK_n f||_1 / ||f||_1
};

BlowUp l1_blowup(int n, double m, const QuadratureSpec& quad = {});

}  // namespace gklab
