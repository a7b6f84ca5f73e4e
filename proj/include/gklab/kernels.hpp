#pragma once

#include <span>
#include <vector>

#include "gklab/numerics.hpp"

namespace gklab {

/// Chebyshev nodes of the first kind in angle form, theta_k = (2k-1)pi/(2n).
/// Stored 0-based: thetas[k-1] is theta_k.
struct NodeSet {
  int n = 0;
  std::vector<double> thetas;

  double theta(int k) const { return thetas[std::size_t(k - 1)]; }
};

NodeSet chebyshev_nodes(int n);

/// Removable-singularity guard on |cos(theta) - cos(theta_k)|.
inline constexpr double kSingularityGuard = 1e-8;

/// Fundamental Lagrange polynomial P_k of the degree-n Chebyshev
/// interpolant, as a function of the angle. Accepts any real theta.
double eval_fundamental(int n, int k, double theta);

/// S_{k,n}(theta) = (P_k(theta + pi/2n) + P_k(theta - pi/2n)) / 2.
double eval_kernel(int n, int k, double theta);

enum class KernelKind { lagrange, grunwald };

namespace detail {
struct NodeData {
  int k;
  double theta;
  double sin_theta;
  double half_sin;
  double half_cos;
};
}  // namespace detail

/// Per-degree precomputation for evaluating all n kernels at a point in
/// O(n) with two transcendental calls per shifted argument.
class KernelBasis {
 public:
  explicit KernelBasis(int n);

  int degree() const noexcept { return n_; }

  double fundamental(int k, double theta) const;
  double kernel(int k, double theta) const;

  /// out[k-1] = P_k(theta) or S_{k,n}(theta).
  void evaluate(double theta, KernelKind kind, std::span<double> out) const;

  /// sum_k coeffs[k-1] * K_k(theta), ascending k, compensated.
  double combine(std::span<const double> coeffs, double theta,
                 KernelKind kind) const;

  /// sum_k |K_k(theta)|, ascending k, compensated.
  double lebesgue(double theta, KernelKind kind) const;

 private:
  int n_;
  double shift_;
  std::vector<detail::NodeData> nodes_;
};

double lebesgue_function(int n, double theta, KernelKind kind);
double lebesgue_constant(int n, KernelKind kind, const Grid& grid);

}  // namespace gklab
