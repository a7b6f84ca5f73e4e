#include "gklab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "gklab/error.hpp"

namespace gklab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEndpointSlack = 1e-12;

GaussLegendre compute_gauss_legendre(int order) {
  GaussLegendre gl;
  gl.nodes.resize(order);
  gl.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= order; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.nodes[order - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) gl.nodes[order / 2] = 0.0;
  return gl;
}

double gauss_panel(const FunctionSpec& f, const GaussLegendre& gl, double lo,
                   double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  CompensatedSum sum;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double t = mid + half * gl.nodes[i];
    const double v = f(t);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::quadrature_failure,
                  "non-finite value of '" + f.name + "' at t=" +
                      std::to_string(t));
    }
    sum += gl.weights[i] * v;
  }
  return half * sum.value();
}

// Panel [lo, hi] with an integrable singularity at `toward` (one of lo, hi).
double graded_panel(const FunctionSpec& f, const GaussLegendre& gl, double lo,
                    double hi, bool toward_lo) {
  const double length = hi - lo;
  CompensatedSum sum;
  double previous = 0.0;
  double last = 0.0;
  for (int level = 0; level < kGradingLevels; ++level) {
    const double outer = length * std::ldexp(1.0, -level);
    const double inner = 0.5 * outer;
    const double c = toward_lo
                         ? gauss_panel(f, gl, lo + inner, lo + outer)
                         : gauss_panel(f, gl, hi - outer, hi - inner);
    sum += c;
    previous = last;
    last = c;
  }
  const double total = sum.value();
  if (std::abs(last) <= 1e-15 * std::abs(total) || previous == 0.0) {
    return total;
  }
  const double ratio = last / previous;
  if (ratio >= 0.999) {
    throw Error(ErrorCode::divergence,
                "graded quadrature of '" + f.name +
                    "' does not converge toward t=" +
                    std::to_string(toward_lo ? lo : hi));
  }
  if (ratio <= 0.0) return total;
  return total + last * ratio / (1.0 - ratio);
}

bool is_singular(const FunctionSpec& f, double t) {
  return std::any_of(f.singularities.begin(), f.singularities.end(),
                     [t](double s) { return std::abs(s - t) <= 1e-14; });
}

}  // namespace

Grid::Grid(double a, double b, std::size_t size) : a_(a), b_(b), size_(size) {
  if (!(a >= -kEndpointSlack && a < b && b <= kPi + kEndpointSlack)) {
    throw Error(ErrorCode::invalid_grid,
                "grid interval must satisfy 0 <= a < b <= pi");
  }
  if (size < 2) {
    throw Error(ErrorCode::invalid_grid, "grid needs at least two points");
  }
}

Grid Grid::full(std::size_t size) { return Grid(0.0, kPi, size); }

double Grid::point(std::size_t i) const noexcept {
  if (i + 1 == size_) return b_;
  return a_ + double(i) * (b_ - a_) / double(size_ - 1);
}

std::vector<double> Grid::points() const {
  std::vector<double> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = point(i);
  return out;
}

void QuadratureSpec::validate() const {
  if (order < 2) {
    throw Error(ErrorCode::invalid_argument, "quadrature order must be >= 2");
  }
  if (subpanels < 1) {
    throw Error(ErrorCode::invalid_argument, "subpanels must be >= 1");
  }
}

double WeightSpec::operator()(double t) const {
  if (kind == Kind::unweighted) return 1.0;
  return std::pow(t, alpha);
}

const GaussLegendre& gauss_legendre(int order) {
  static std::mutex mutex;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, compute_gauss_legendre(order)).first;
  }
  return it->second;
}

double integrate(const FunctionSpec& f, double a, double b,
                 const QuadratureSpec& quad) {
  quad.validate();
  if (!(a < b) || a < -kEndpointSlack || b > kPi + kEndpointSlack) {
    throw Error(ErrorCode::invalid_argument,
                "integration interval must satisfy 0 <= a < b <= pi");
  }
  const GaussLegendre& gl = gauss_legendre(quad.order);

  std::vector<double> cuts{a};
  for (double bp : f.breakpoints) {
    if (bp > a && bp < b && (quad.split_at_breakpoints || is_singular(f, bp))) {
      cuts.push_back(bp);
    }
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  CompensatedSum total;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double lo = cuts[s];
    const double hi = cuts[s + 1];
    if (!(hi > lo)) continue;
    const int by_resolution =
        int(std::ceil(double(f.resolution) * (hi - lo) / kPi));
    const int panels = std::max(quad.subpanels, by_resolution);
    const bool sing_lo = is_singular(f, lo);
    const bool sing_hi = is_singular(f, hi);
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
      const double u = lo + p * width;
      const double v = (p + 1 == panels) ? hi : lo + (p + 1) * width;
      if (p == 0 && sing_lo) {
        total += graded_panel(f, gl, u, v, true);
      } else if (p + 1 == panels && sing_hi) {
        total += graded_panel(f, gl, u, v, false);
      } else {
        total += gauss_panel(f, gl, u, v);
      }
    }
  }
  return total.value();
}

double lp_norm(const FunctionSpec& f, double p, double a, double b,
               const WeightSpec& weight, const QuadratureSpec& quad) {
  if (!(p >= 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "invalid exponent p=" + std::to_string(p) + " (need p >= 1)");
  }
  if (weight.kind == WeightSpec::Kind::power &&
      !(weight.alpha > -1.0 && weight.alpha < p - 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "power weight exponent must lie in (-1, p-1)");
  }
  FunctionSpec integrand = derive(f, f.name + "^p", [&f, p, weight](double t) {
    const double v = std::abs(f(t));
    const double vp = (p == 1.0) ? v : (p == 2.0 ? v * v : std::pow(v, p));
    return weight.kind == WeightSpec::Kind::unweighted ? vp : vp * weight(t);
  });
  if (weight.kind == WeightSpec::Kind::power && weight.alpha < 0.0 &&
      !is_singular(integrand, 0.0)) {
    integrand.singularities.push_back(0.0);
    integrand.breakpoints.insert(integrand.breakpoints.begin(), 0.0);
  }
  const double value = integrate(integrand, a, b, quad);
  return (p == 1.0) ? value : std::pow(value, 1.0 / p);
}

double integrate_abs_power(const std::function<double(double)>& g, double a,
                           double b, double p, int probes,
                           std::span<const double> cuts,
                           const QuadratureSpec& quad) {
  quad.validate();
  if (!(p >= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "exponent must be >= 1");
  }
  if (!(a < b) || probes < 1) {
    throw Error(ErrorCode::invalid_argument,
                "need a < b and a positive probe count");
  }
  std::vector<double> knots{a, b};
  for (double c : cuts) {
    if (c > a && c < b) knots.push_back(c);
  }
  const double step = (b - a) / probes;
  double prev_t = a;
  double prev_v = g(a);
  for (int i = 1; i <= probes; ++i) {
    const double t = (i == probes) ? b : a + i * step;
    const double v = g(t);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::quadrature_failure,
                  "non-finite integrand at t=" + std::to_string(t));
    }
    if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
      double lo = prev_t;
      double hi = t;
      double vlo = prev_v;
      for (int iter = 0; iter < 100 && hi - lo > 1e-15 * (1.0 + std::abs(lo));
           ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double vm = g(mid);
        if (vm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((vm < 0.0) == (vlo < 0.0)) {
          lo = mid;
          vlo = vm;
        } else {
          hi = mid;
        }
      }
      knots.push_back(0.5 * (lo + hi));
    }
    prev_t = t;
    prev_v = v;
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  FunctionSpec piece;
  piece.name = "|g|^p";
  piece.evaluator = [&g, p](double t) {
    const double v = std::abs(g(t));
    return p == 1.0 ? v : (p == 2.0 ? v * v : std::pow(v, p));
  };
  const GaussLegendre& gl = gauss_legendre(quad.order);
  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double lo = knots[i];
    const double hi = knots[i + 1];
    const double width = (hi - lo) / quad.subpanels;
    for (int s = 0; s < quad.subpanels; ++s) {
      const double u = lo + s * width;
      const double v = (s + 1 == quad.subpanels) ? hi : u + width;
      if (v > u) total += gauss_panel(piece, gl, u, v);
    }
  }
  return total.value();
}

std::vector<double> sample(const FunctionSpec& f, const Grid& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.point(i);
    const double v = f(t);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::function_domain,
                  "'" + f.name + "' is not finite at t=" + std::to_string(t));
    }
    out[i] = v;
  }
  return out;
}

double sup_norm(std::span<const double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double sup_norm(const FunctionSpec& f, const Grid& grid) {
  return sup_norm(sample(f, grid));
}

}  // namespace gklab
