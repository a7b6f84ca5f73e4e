#include "gklab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "gklab/error.hpp"
#include "gklab/kernels.hpp"

namespace gklab {

namespace {

constexpr double kPi = std::numbers::pi;

RateFit least_squares(const std::vector<double>& x,
                      const std::vector<double>& y) {
  const double m = double(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) {
    throw Error(ErrorCode::insufficient_data, "all abscissae coincide");
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  fit.points_used = x.size();
  return fit;
}

void check_lengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::invalid_argument, "fit inputs differ in length");
  }
}

}  // namespace

RateFit rate_fit(std::span<const double> n, std::span<const double> error) {
  check_lengths(n, error);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] > 0.0 && error[i] > 0.0 && std::isfinite(error[i])) {
      x.push_back(std::log(n[i]));
      y.push_back(std::log(error[i]));
    }
  }
  if (x.size() < 3) {
    throw Error(ErrorCode::insufficient_data,
                "rate fit needs at least 3 positive records, got " +
                    std::to_string(x.size()));
  }
  return least_squares(x, y);
}

RateFit trend_fit(std::span<const double> n, std::span<const double> value) {
  check_lengths(n, value);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] > 0.0 && std::isfinite(value[i])) {
      x.push_back(std::log(n[i]));
      y.push_back(value[i]);
    }
  }
  if (x.size() < 3) {
    throw Error(ErrorCode::insufficient_data,
                "trend fit needs at least 3 records, got " +
                    std::to_string(x.size()));
  }
  return least_squares(x, y);
}

double m_n(double p, int n) {
  if (!(p >= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "m_n needs p >= 1");
  }
  if (n < 1) {
    throw Error(ErrorCode::invalid_degree, "m_n needs n >= 1");
  }
  const double nn = double(n);
  if (p == 1.0) return (1.0 + std::log(nn)) / nn;
  return 1.0 / nn + std::pow(nn, -1.0 / p);
}

// ---------------------------------------------------------------------------

double modulus(std::span<const double> values, double spacing, double delta) {
  if (!(delta > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "modulus needs delta > 0");
  }
  if (values.size() < 2) return 0.0;
  const auto window = std::min<std::size_t>(
      std::size_t(std::floor(delta / spacing + 1e-9)), values.size() - 1);
  if (window == 0) return 0.0;

  // Sliding max - min over every run of window+1 consecutive samples.
  std::deque<std::size_t> hi, lo;
  double best = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    while (!hi.empty() && values[hi.back()] <= values[j]) hi.pop_back();
    while (!lo.empty() && values[lo.back()] >= values[j]) lo.pop_back();
    hi.push_back(j);
    lo.push_back(j);
    if (j >= window) {
      const std::size_t start = j - window;
      while (hi.front() < start) hi.pop_front();
      while (lo.front() < start) lo.pop_front();
    }
    best = std::max(best, values[hi.front()] - values[lo.front()]);
  }
  return best;
}

double modulus(const FunctionSpec& f, double delta, const Grid& grid) {
  const auto values = sample(f, grid);
  return modulus(values, grid.spacing(), std::min(delta, grid.b() - grid.a()));
}

ModulusProfile::ModulusProfile(std::span<const double> values, double spacing,
                               std::size_t max_window)
    : spacing_(spacing) {
  const std::size_t w_max =
      values.empty() ? 0 : std::min(max_window, values.size() - 1);
  omega_.assign(w_max + 1, 0.0);
  for (std::size_t d = 1; d <= w_max; ++d) {
    double widest = 0.0;
    for (std::size_t i = 0; i + d < values.size(); ++i) {
      widest = std::max(widest, std::abs(values[i + d] - values[i]));
    }
    omega_[d] = std::max(omega_[d - 1], widest);
  }
}

double ModulusProfile::operator()(double delta) const {
  if (delta <= 0.0) return 0.0;
  const auto w = std::min<std::size_t>(
      std::size_t(std::floor(delta / spacing_ + 1e-9)), omega_.size() - 1);
  return omega_[w];
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kFineCells = 1 << 17;
constexpr int kFineOrder = 8;

// Antiderivative of g on [0, pi] from a cumulative table on a dyadic fine
// grid plus a Gauss-Legendre partial cell, extended to [-pi, 2pi] for the
// even reflection of g about 0 and pi.
class Antiderivative {
 public:
  Antiderivative(FunctionSpec g, const QuadratureSpec& quad)
      : g_(std::move(g)),
        step_(kPi / kFineCells),
        table_(std::size_t(kFineCells) + 1, 0.0),
        special_(std::size_t(kFineCells), 0),
        gl_(&gauss_legendre(kFineOrder)),
        quad_{kFineOrder, 1, quad.split_at_breakpoints} {
    for (double bp : g_.breakpoints) {
      const auto i = std::size_t(std::clamp(std::floor(bp / step_), 0.0,
                                            double(kFineCells - 1)));
      special_[i] = 1;
      if (i > 0 && std::abs(bp - double(i) * step_) < 1e-15) special_[i - 1] = 1;
    }
    CompensatedSum running;
    for (int i = 0; i < kFineCells; ++i) {
      running += cell(std::size_t(i), node(i), node(i + 1));
      table_[std::size_t(i) + 1] = running.value();
    }
  }

  double at(double x) const {
    x = std::clamp(x, 0.0, kPi);
    const auto i = std::size_t(
        std::clamp(std::floor(x / step_), 0.0, double(kFineCells - 1)));
    const double base = node(int(i));
    if (x <= base) return table_[i];
    return table_[i] + cell(i, base, x);
  }

  double reflected(double x) const {
    if (x < 0.0) return -at(-x);
    if (x > kPi) return 2.0 * table_.back() - at(2.0 * kPi - x);
    return at(x);
  }

 private:
  double node(int i) const { return i == kFineCells ? kPi : i * step_; }

  double cell(std::size_t i, double lo, double hi) const {
    if (special_[i]) return integrate(g_, lo, hi, quad_);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (std::size_t q = 0; q < gl_->nodes.size(); ++q) {
      sum += gl_->weights[q] * g_(mid + half * gl_->nodes[q]);
    }
    return half * sum;
  }

  FunctionSpec g_;
  double step_;
  std::vector<double> table_;
  std::vector<char> special_;
  const GaussLegendre* gl_;
  QuadratureSpec quad_;
};

double reflect_into_range(double y) {
  if (y < 0.0) return -y;
  if (y > kPi) return 2.0 * kPi - y;
  return y;
}

}  // namespace

double KFunctionalProfile::evaluate(double delta) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < bandwidths.size(); ++j) {
    best = std::min(best, residuals[j] + delta * derivative_bounds[j]);
  }
  return best;
}

double KFunctionalProfile::best_bandwidth(double delta) const {
  double best = std::numeric_limits<double>::infinity();
  double arg = 0.0;
  for (std::size_t j = 0; j < bandwidths.size(); ++j) {
    const double v = residuals[j] + delta * derivative_bounds[j];
    if (v < best) {
      best = v;
      arg = bandwidths[j];
    }
  }
  return arg;
}

KFunctionalProfile k_functional_profile(const FunctionSpec& f, double p,
                                        const QuadratureSpec& quad,
                                        const Grid& grid) {
  if (!(p >= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "K-functional needs p >= 1");
  }
  KFunctionalProfile profile;
  profile.p = p;
  const auto points = grid.points();

  std::unique_ptr<Antiderivative> shared;
  if (f.singularities.empty()) {
    FunctionSpec g = f;
    shared = std::make_unique<Antiderivative>(std::move(g), quad);
  }

  for (int j = 2; j <= 16; ++j) {
    const double h = kPi * std::ldexp(1.0, -j);

    double cap = std::numeric_limits<double>::infinity();
    std::unique_ptr<Antiderivative> own;
    const Antiderivative* anti = shared.get();
    if (!f.singularities.empty()) {
      cap = 0.0;
      for (double t : points) {
        const bool far = std::all_of(
            f.singularities.begin(), f.singularities.end(),
            [&](double s) { return std::abs(t - s) >= h; });
        if (far) cap = std::max(cap, std::abs(f(t)));
      }
      FunctionSpec clamped = derive(f, f.name + "_clamped", [&f, cap](double t) {
        return std::clamp(f(t), -cap, cap);
      });
      clamped.singularities.clear();
      own = std::make_unique<Antiderivative>(std::move(clamped), quad);
      anti = own.get();
    }
    auto clamp_f = [&f, cap](double t) { return std::clamp(f(t), -cap, cap); };

    FunctionSpec residual =
        derive(f, f.name + "-g_h", [&f, anti, h](double x) {
          const double g = (anti->reflected(x + 0.5 * h) -
                            anti->reflected(x - 0.5 * h)) / h;
          return f(x) - g;
        });
    std::vector<double> kinks = f.breakpoints;
    kinks.push_back(0.0);
    kinks.push_back(kPi);
    for (double b : kinks) {
      for (double s : {b - 0.5 * h, b + 0.5 * h}) {
        const double r = reflect_into_range(s);
        if (r > 0.0 && r < kPi) residual.breakpoints.push_back(r);
      }
    }
    std::sort(residual.breakpoints.begin(), residual.breakpoints.end());

    double slope = 0.0;
    for (double x : points) {
      const double hi = clamp_f(reflect_into_range(x + 0.5 * h));
      const double lo = clamp_f(reflect_into_range(x - 0.5 * h));
      slope = std::max(slope, std::abs(hi - lo) / h);
    }

    profile.bandwidths.push_back(h);
    profile.residuals.push_back(lp_norm(residual, p, 0.0, kPi, {}, quad));
    profile.derivative_bounds.push_back(slope);
  }
  return profile;
}

double k_functional_upper(const FunctionSpec& f, double delta, double p,
                          const QuadratureSpec& quad, const Grid& grid) {
  if (!(delta >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "K-functional needs delta >= 0");
  }
  return k_functional_profile(f, p, quad, grid).evaluate(delta);
}

// ---------------------------------------------------------------------------

std::vector<double> maximal_function(const FunctionSpec& f, const Grid& grid,
                                     const QuadratureSpec& quad) {
  const std::size_t n = grid.size();
  if (n > kMaximalGridLimit) {
    throw Error(ErrorCode::invalid_argument,
                "maximal function limited to " +
                    std::to_string(kMaximalGridLimit) + " grid points");
  }
  const FunctionSpec abs_f =
      derive(f, "|" + f.name + "|", [&f](double t) { return std::abs(f(t)); });
  const auto pts = grid.points();
  std::vector<double> prefix(n, 0.0);
  CompensatedSum running;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    try {
      running += integrate(abs_f, pts[i], pts[i + 1], quad);
    } catch (const Error& e) {
      throw Error(ErrorCode::quadrature_failure,
                  std::string("maximal function: ") + e.what());
    }
    prefix[i + 1] = running.value();
  }

  std::vector<double> mf(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = n - 1; j > i; --j) {
      best = std::max(best, (prefix[j] - prefix[i]) / (pts[j] - pts[i]));
      mf[j] = std::max(mf[j], best);
    }
    mf[i] = std::max(mf[i], best);
  }
  return mf;
}

double maximal_ratio(const KernelExpansion& gk, std::span<const double> mf,
                     double eps, const Grid& grid) {
  if (!(eps > 0.0 && eps < kPi / 2.0)) {
    throw Error(ErrorCode::invalid_argument, "eps must lie in (0, pi/2)");
  }
  double ratio = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.point(i);
    if (t < eps - 1e-12 || t > kPi - eps + 1e-12) continue;
    ratio = std::max(ratio, std::abs(gk(t)) / std::max(mf[i], kMaximalFloor));
  }
  return ratio;
}

double maximal_ratio(int n, const FunctionSpec& f, double eps,
                     const Grid& grid, const QuadratureSpec& quad) {
  const auto mf = maximal_function(f, grid, quad);
  return maximal_ratio(gk_operator(chebyshev_nodes(n), f, quad), mf, eps, grid);
}

// ---------------------------------------------------------------------------

namespace {

double kernel_norm(int n, int k, double p, bool weighted,
                   const QuadratureSpec& quad) {
  const KernelBasis basis(n);
  const double tk = chebyshev_nodes(n).theta(k);  // validates n
  (void)basis.kernel(k, tk);                       // validates k
  const double shift = kPi / (2.0 * n);
  const std::vector<double> cuts{tk - shift, tk, tk + shift};
  auto g = [&](double t) {
    const double s = basis.kernel(k, t);
    return weighted ? (t - tk) * s : s;
  };
  const double value = integrate_abs_power(g, 0.0, kPi, p, 64 * n, cuts, quad);
  return p == 1.0 ? value : std::pow(value, 1.0 / p);
}

}  // namespace

double prop_norm_i(int n, int k, double p, const QuadratureSpec& quad) {
  return kernel_norm(n, k, p, true, quad);
}

double prop_norm_ii(int n, int k, double p, const QuadratureSpec& quad) {
  return kernel_norm(n, k, p, false, quad);
}

double gk_l1_operator_norm(int n, const QuadratureSpec& quad) {
  double best = 0.0;
  for (int k = 1; k <= (n + 1) / 2; ++k) {
    best = std::max(best, prop_norm_ii(n, k, 1.0, quad));
  }
  return 2.0 * n / kPi * best;
}

// ---------------------------------------------------------------------------

EnvelopeFit envelope_check(int n, const FunctionSpec& f, const Grid& grid,
                           const QuadratureSpec& quad) {
  const auto theta = grid.points();
  const auto f_theta = sample(f, grid);
  const auto gk = gk_operator(chebyshev_nodes(n), f, quad).apply(grid);

  // f o arccos is sampled on a uniform x-grid of the theta-grid's
  // cardinality, plus a finer x-grid for windows shorter than one coarse
  // cell so that 1/n^2 is resolved.
  const double nn = double(n);
  const std::size_t size = grid.size();
  auto sample_x = [&f](std::size_t count) {
    const double hx = 2.0 / double(count - 1);
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double x = (i + 1 == count) ? 1.0 : -1.0 + double(i) * hx;
      values[i] = f(std::acos(x));
    }
    return values;
  };
  const double hx = 2.0 / double(size - 1);
  const ModulusProfile coarse(sample_x(size), hx,
                              std::size_t(std::ceil(1.0 / (nn * hx))) + 1);
  const std::size_t fine_size = std::size_t(8.0 * nn * nn) + 1;
  std::optional<ModulusProfile> fine;
  if (fine_size > size) {
    const double hf = 2.0 / double(fine_size - 1);
    fine.emplace(sample_x(fine_size), hf, std::size_t(std::ceil(hx / hf)) + 1);
  }
  auto omega_x = [&](double delta) {
    double w = coarse(delta);
    if (fine) w = std::max(w, (*fine)(std::min(delta, hx)));
    return w;
  };
  const ModulusProfile omega_theta(
      f_theta, grid.spacing(),
      std::size_t(std::ceil(kPi / (nn * grid.spacing()))) + 1);
  const double omega2 = omega_x(1.0 / (nn * nn));
  const double omega3 = omega_theta(kPi / nn);

  EnvelopeFit fit;
  for (std::size_t i = 0; i < size; ++i) {
    const double err = std::abs(gk[i] - f_theta[i]);
    fit.max_error = std::max(fit.max_error, err);
    if (err <= kEnvelopeErrorFloor) continue;
    const double env = omega_x(std::sin(theta[i]) / nn) + omega2 + omega3;
    if (env <= 0.0) {
      throw Error(ErrorCode::envelope_degenerate,
                  "zero envelope with error " + std::to_string(err) +
                      " at theta=" + std::to_string(theta[i]));
    }
    fit.constant = std::max(fit.constant, err / env);
    ++fit.points_used;
  }
  return fit;
}

}  // namespace gklab
