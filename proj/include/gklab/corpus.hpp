#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gklab {

enum class Smoothness {
  analytic,
  c1,
  lipschitz,
  continuous,  // bounded and continuous, no usable Lipschitz constant
  bounded_variation_jump,
  lp_only,
};

std::string_view to_string(Smoothness s) noexcept;

using Evaluator = std::function<double(double)>;

/// A real function on [0, pi] together with the metadata the quadrature and
/// the experiments need: where it is non-smooth, where it blows up, and how
/// finely it oscillates.
struct FunctionSpec {
  std::string name;
  Evaluator evaluator;
  /// Jumps, kinks and singular points, ascending.
  std::vector<double> breakpoints;
  /// Subset of the breakpoints at which the function is unbounded.
  std::vector<double> singularities;
  Smoothness smoothness = Smoothness::analytic;
  /// For lp_only members: membership holds for p < p_max.
  double p_max = std::numeric_limits<double>::infinity();
  std::optional<double> lipschitz_constant;
  std::optional<Evaluator> antiderivative;
  /// Minimum number of quadrature panels over a length-pi interval needed to
  /// resolve the oscillation of the function.
  int resolution = 0;

  double operator()(double theta) const { return evaluator(theta); }

  bool is_continuous() const noexcept;
  bool in_lp(double p) const noexcept;
};

/// Returns a copy of `base` with a new evaluator. Breakpoints, singularities
/// and resolution are inherited; closed forms are dropped.
FunctionSpec derive(const FunctionSpec& base, std::string name, Evaluator fn);

FunctionSpec corpus_get(std::string_view name);
const std::vector<std::string>& corpus_names();

}  // namespace gklab
