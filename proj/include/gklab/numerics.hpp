#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gklab/corpus.hpp"

namespace gklab {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// N equally spaced samples of [a, b], endpoints included.
class Grid {
 public:
  static constexpr std::size_t default_size = 8193;

  Grid(double a, double b, std::size_t size);
  static Grid full(std::size_t size = default_size);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t size() const noexcept { return size_; }
  double spacing() const noexcept { return (b_ - a_) / double(size_ - 1); }
  double point(std::size_t i) const noexcept;
  std::vector<double> points() const;

 private:
  double a_;
  double b_;
  std::size_t size_;
};

struct QuadratureSpec {
  int order = 16;
  int subpanels = 4;
  bool split_at_breakpoints = true;

  void validate() const;
};

struct WeightSpec {
  enum class Kind { unweighted, power };
  Kind kind = Kind::unweighted;
  double alpha = 0.0;

  static WeightSpec none() { return {}; }
  static WeightSpec power(double alpha) { return {Kind::power, alpha}; }
  double operator()(double t) const;
};

/// Nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached per order; safe to call concurrently.
const GaussLegendre& gauss_legendre(int order);

/// Number of levels of geometric grading applied to a panel that ends at a
/// singular point.
inline constexpr int kGradingLevels = 20;

/// Composite Gauss-Legendre over [a, b]. The interval is split at f's
/// breakpoints; each piece gets max(quad.subpanels, resolution-scaled) panels.
/// Panels touching a singular point are graded geometrically toward it and
/// the remaining tail is extrapolated from the decay of the last levels.
double integrate(const FunctionSpec& f, double a, double b,
                 const QuadratureSpec& quad = {});

/// (int_a^b |f|^p w)^{1/p}.
double lp_norm(const FunctionSpec& f, double p, double a, double b,
               const WeightSpec& weight = {}, const QuadratureSpec& quad = {});

/// int_a^b |g|^p for a smooth, sign-changing g. Sign changes are located by
/// a uniform pre-scan with `probes` samples followed by bisection; every
/// piece between consecutive zeros (and the supplied cuts) is integrated by
/// composite Gauss-Legendre, so |g|^p is smooth on each panel.
double integrate_abs_power(const std::function<double(double)>& g, double a,
                           double b, double p, int probes,
                           std::span<const double> cuts = {},
                           const QuadratureSpec& quad = {});

double sup_norm(const FunctionSpec& f, const Grid& grid);
double sup_norm(std::span<const double> values);

/// Samples f at every grid point, turning evaluator failures and non-finite
/// values into function-domain errors.
std::vector<double> sample(const FunctionSpec& f, const Grid& grid);

}  // namespace gklab
