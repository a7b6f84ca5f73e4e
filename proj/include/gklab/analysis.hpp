#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gklab/corpus.hpp"
#include "gklab/numerics.hpp"
#include "gklab/operators.hpp"

namespace gklab {

// ---------------------------------------------------------------------------
// Fits

/// Least-squares line y = slope * x + intercept.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

/// Fits ln(error) against ln(n). Records with non-positive n or error are
/// skipped; fewer than three usable records is an insufficient-data error.
RateFit rate_fit(std::span<const double> n, std::span<const double> error);

/// Fits value against ln(n) (linear in the value). Used for "bounded, no
/// upward trend" and logarithmic-growth checks.
RateFit trend_fit(std::span<const double> n, std::span<const double> value);

struct ConvergenceRecord {
  std::string function;
  std::string op;    // "GK", "G", "L"
  std::string norm;  // e.g. "sup", "L2", "L2,w=t^0.5,[0.3,2.84]"
  int n = 0;
  double error = 0.0;
  double wall_time = 0.0;
};

/// (1 + ln n)/n for p = 1, else 1/n + n^{-1/p}.
double m_n(double p, int n);

// ---------------------------------------------------------------------------
// Modulus of continuity

/// omega(f, delta) over pairs of grid points at distance <= delta.
double modulus(const FunctionSpec& f, double delta, const Grid& grid);
/// Same on pre-sampled equally spaced values.
double modulus(std::span<const double> values, double spacing, double delta);

/// omega for every window of up to `max_window` grid steps, answering many
/// delta queries on the same samples in O(1) each.
class ModulusProfile {
 public:
  ModulusProfile(std::span<const double> values, double spacing,
                 std::size_t max_window);
  double operator()(double delta) const;

 private:
  double spacing_;
  std::vector<double> omega_;  // omega_[w] for index distance <= w
};

// ---------------------------------------------------------------------------
// K-functional

/// For each mollifier bandwidth h = pi 2^{-j}, j = 2..16: the residual
/// ||f - g_h||_p and the derivative bound ||g_h'||_inf of the moving average
/// g_h (window h, even reflection at 0 and pi). For members with singular
/// points, g_h is the moving average of f clamped at the largest |f| found
/// at distance >= h from every singularity.
struct KFunctionalProfile {
  double p = 1.0;
  std::vector<double> bandwidths;
  std::vector<double> residuals;
  std::vector<double> derivative_bounds;

  /// min_h residual + delta * derivative_bound.
  double evaluate(double delta) const;
  double best_bandwidth(double delta) const;
};

KFunctionalProfile k_functional_profile(const FunctionSpec& f, double p,
                                        const QuadratureSpec& quad = {},
                                        const Grid& grid = Grid::full());

/// Upper bound on K_p(f, delta) = inf_g ||f - g||_p + delta ||g'||_inf.
double k_functional_upper(const FunctionSpec& f, double delta, double p,
                          const QuadratureSpec& quad = {},
                          const Grid& grid = Grid::full());

// ---------------------------------------------------------------------------
// Hardy-Littlewood maximal function

inline constexpr std::size_t kMaximalGridLimit = 4097;

/// Mf at each grid point, the supremum taken over intervals whose endpoints
/// are grid points. O(N^2) on at most 4096 panels.
std::vector<double> maximal_function(const FunctionSpec& f, const Grid& grid,
                                     const QuadratureSpec& quad = {});

inline constexpr double kMaximalFloor = 1e-12;

/// max over grid points in [eps, pi - eps] of |GK_n f| / max(Mf, floor).
/// `grid` spans [0, pi] so Mf sees every interval inside [0, pi].
double maximal_ratio(int n, const FunctionSpec& f, double eps,
                     const Grid& grid, const QuadratureSpec& quad = {});
/// Same with Mf already computed on `grid`.
double maximal_ratio(const KernelExpansion& gk, std::span<const double> mf,
                     double eps, const Grid& grid);

// ---------------------------------------------------------------------------
// Kernel integrals

/// (int_0^pi |theta - theta_k|^p |S_{k,n}|^p)^{1/p}.
double prop_norm_i(int n, int k, double p, const QuadratureSpec& quad = {});
/// (int_0^pi |S_{k,n}|^p)^{1/p}.
double prop_norm_ii(int n, int k, double p, const QuadratureSpec& quad = {});

/// Exact L^1 -> L^1 norm of GK_n: max_k (2n/pi) ||S_{k,n}||_1.
double gk_l1_operator_norm(int n, const QuadratureSpec& quad = {});

// ---------------------------------------------------------------------------
// Pointwise rate envelope

struct EnvelopeFit {
  double constant = 0.0;   // smallest C with error <= C * envelope
  double max_error = 0.0;
  std::size_t points_used = 0;
};

inline constexpr double kEnvelopeErrorFloor = 1e-10;

/// Fits C in |GK_n f(theta) - f(theta)| <= C [omega(f o arccos, sin(theta)/n)
/// + omega(f o arccos, 1/n^2) + omega(f, pi/n)] over the grid. Points whose
/// error is below 1e-10 are ignored.
EnvelopeFit envelope_check(int n, const FunctionSpec& f, const Grid& grid,
                           const QuadratureSpec& quad = {});

}  // namespace gklab
