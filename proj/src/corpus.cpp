#include "gklab/corpus.hpp"

#include <cmath>
#include <numbers>

#include "gklab/error.hpp"

namespace gklab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHatCenter = kPi / 3.0;
constexpr double kHatHalfWidth = 0.05;
constexpr int kRoughTerms = 12;

FunctionSpec make_const_one() {
  FunctionSpec f;
  f.name = "const_one";
  f.evaluator = [](double) { return 1.0; };
  f.lipschitz_constant = 0.0;
  f.antiderivative = [](double t) { return t; };
  return f;
}

FunctionSpec make_linear() {
  FunctionSpec f;
  f.name = "linear";
  f.evaluator = [](double t) { return t; };
  f.lipschitz_constant = 1.0;
  f.antiderivative = [](double t) { return 0.5 * t * t; };
  return f;
}

FunctionSpec make_square() {
  FunctionSpec f;
  f.name = "square";
  f.evaluator = [](double t) { return t * t; };
  f.lipschitz_constant = 2.0 * kPi;
  f.antiderivative = [](double t) { return t * t * t / 3.0; };
  return f;
}

FunctionSpec make_sine() {
  FunctionSpec f;
  f.name = "sine";
  f.evaluator = [](double t) { return std::sin(t); };
  f.lipschitz_constant = 1.0;
  f.antiderivative = [](double t) { return -std::cos(t); };
  return f;
}

FunctionSpec make_cosine() {
  FunctionSpec f;
  f.name = "cosine";
  f.evaluator = [](double t) { return std::cos(t); };
  f.lipschitz_constant = 1.0;
  f.antiderivative = [](double t) { return std::sin(t); };
  return f;
}

FunctionSpec make_kink() {
  FunctionSpec f;
  f.name = "kink";
  f.evaluator = [](double t) { return std::abs(t - kPi / 2.0); };
  f.breakpoints = {kPi / 2.0};
  f.smoothness = Smoothness::lipschitz;
  f.lipschitz_constant = 1.0;
  f.antiderivative = [](double t) {
    const double c = kPi / 2.0;
    if (t <= c) return c * t - 0.5 * t * t;
    return 0.5 * (t - c) * (t - c) + 0.5 * c * c;
  };
  return f;
}

FunctionSpec make_hat_narrow() {
  FunctionSpec f;
  f.name = "hat_narrow";
  f.evaluator = [](double t) {
    const double d = std::abs(t - kHatCenter);
    return d >= kHatHalfWidth ? 0.0 : 1.0 - d / kHatHalfWidth;
  };
  f.breakpoints = {kHatCenter - kHatHalfWidth, kHatCenter,
                   kHatCenter + kHatHalfWidth};
  f.smoothness = Smoothness::lipschitz;
  f.lipschitz_constant = 1.0 / kHatHalfWidth;
  f.antiderivative = [](double t) {
    const double lo = kHatCenter - kHatHalfWidth;
    const double hi = kHatCenter + kHatHalfWidth;
    const double w = kHatHalfWidth;
    if (t <= lo) return 0.0;
    if (t <= kHatCenter) {
      const double s = t - lo;
      return 0.5 * s * s / w;
    }
    if (t <= hi) {
      const double s = hi - t;
      return w - 0.5 * s * s / w;
    }
    return w;
  };
  return f;
}

FunctionSpec make_step() {
  FunctionSpec f;
  f.name = "step";
  f.evaluator = [](double t) { return t <= kPi / 2.0 ? 1.0 : 0.0; };
  f.breakpoints = {kPi / 2.0};
  f.smoothness = Smoothness::bounded_variation_jump;
  f.antiderivative = [](double t) { return std::min(t, kPi / 2.0); };
  return f;
}

FunctionSpec make_root_singular() {
  FunctionSpec f;
  f.name = "root_singular";
  f.evaluator = [](double t) { return std::pow(t, -0.25); };
  f.breakpoints = {0.0};
  f.singularities = {0.0};
  f.smoothness = Smoothness::lp_only;
  f.p_max = 4.0;
  f.antiderivative = [](double t) { return 4.0 / 3.0 * std::pow(t, 0.75); };
  return f;
}

// Lacunary sum over j = 0..12 of 2^{-j/2} cos(2^j t); its modulus of
// continuity behaves like sqrt(delta) down to the scale 2^{-12}.
FunctionSpec make_rough() {
  FunctionSpec f;
  f.name = "rough";
  f.evaluator = [](double t) {
    double sum = 0.0;
    double freq = 1.0;
    double amp = 1.0;
    for (int j = 0; j <= kRoughTerms; ++j) {
      sum += amp * std::cos(freq * t);
      freq *= 2.0;
      amp *= std::numbers::sqrt2 / 2.0;
    }
    return sum;
  };
  f.smoothness = Smoothness::continuous;
  f.antiderivative = [](double t) {
    double sum = 0.0;
    double freq = 1.0;
    double amp = 1.0;
    for (int j = 0; j <= kRoughTerms; ++j) {
      sum += amp * std::sin(freq * t) / freq;
      freq *= 2.0;
      amp *= std::numbers::sqrt2 / 2.0;
    }
    return sum;
  };
  f.resolution = 1 << (kRoughTerms + 1);
  return f;
}

}  // namespace

std::string_view to_string(Smoothness s) noexcept {
  switch (s) {
    case Smoothness::analytic: return "analytic";
    case Smoothness::c1: return "C1";
    case Smoothness::lipschitz: return "lipschitz";
    case Smoothness::continuous: return "continuous";
    case Smoothness::bounded_variation_jump: return "bounded_variation_jump";
    case Smoothness::lp_only: return "lp_only";
  }
  return "unknown";
}

bool FunctionSpec::is_continuous() const noexcept {
  return smoothness != Smoothness::bounded_variation_jump &&
         smoothness != Smoothness::lp_only;
}

bool FunctionSpec::in_lp(double p) const noexcept {
  return smoothness != Smoothness::lp_only || p < p_max;
}

FunctionSpec derive(const FunctionSpec& base, std::string name, Evaluator fn) {
  FunctionSpec out;
  out.name = std::move(name);
  out.evaluator = std::move(fn);
  out.breakpoints = base.breakpoints;
  out.singularities = base.singularities;
  out.smoothness = base.smoothness;
  out.p_max = base.p_max;
  out.resolution = base.resolution;
  return out;
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "const_one", "linear", "square", "sine",          "cosine",
      "kink",      "hat_narrow", "step", "root_singular", "rough"};
  return names;
}

FunctionSpec corpus_get(std::string_view name) {
  if (name == "const_one") return make_const_one();
  if (name == "linear") return make_linear();
  if (name == "square") return make_square();
  if (name == "sine") return make_sine();
  if (name == "cosine") return make_cosine();
  if (name == "kink") return make_kink();
  if (name == "hat_narrow") return make_hat_narrow();
  if (name == "step") return make_step();
  if (name == "root_singular") return make_root_singular();
  if (name == "rough") return make_rough();

  std::string known;
  for (const auto& n : corpus_names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw Error(ErrorCode::unknown_function,
              "no corpus function named '" + std::string(name) +
                  "'; known: " + known);
}

}  // namespace gklab
