#include "gklab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gklab/error.hpp"

namespace gklab {

using detail::NodeData;

namespace {

constexpr double kPi = std::numbers::pi;

void check_degree(int n) {
  if (n < 1) {
    throw Error(ErrorCode::invalid_degree,
                "degree must be >= 1, got " + std::to_string(n));
  }
}

void check_index(int n, int k) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::index_out_of_range,
                "kernel index " + std::to_string(k) + " outside 1.." +
                    std::to_string(n));
  }
}

struct Point {
  double theta;  // reduced to [0, pi]
  double cos_n;
  double half_sin;
  double half_cos;
};

// P_k is even and 2pi-periodic in theta, so every real argument maps to
// [0, pi] without changing the value.
Point reduce(int n, double theta) {
  double t = std::abs(std::remainder(theta, 2.0 * kPi));
  t = std::min(t, kPi);
  return {t, std::cos(n * t), std::sin(0.5 * t), std::cos(0.5 * t)};
}

NodeData make_node(int n, int k) {
  const double theta = double(2 * k - 1) * kPi / double(2 * n);
  return {k, theta, std::sin(theta), std::sin(0.5 * theta),
          std::cos(0.5 * theta)};
}

// With d = theta - theta_k,
//   cos(theta) - cos(theta_k) = -2 sin((theta+theta_k)/2) sin(d/2),
//   cos(n theta) = -(-1)^{k+1} sin(n d),
// so P_k = sin(n d) sin(theta_k) / (2n sin((theta+theta_k)/2) sin(d/2)).
// Away from the node the original quotient is used. Close to it the
// Dirichlet-type factor sin(n d)/(2n sin(d/2)) is evaluated from d directly,
// and inside the guard (while n|d| is small) it is replaced by its Taylor
// polynomial 1 - (n^2 - 1/4) d^2 / 6.
inline double fundamental_value(int n, const NodeData& node, const Point& pt) {
  constexpr double kNearNode = 1e-3;
  const double s_plus =
      pt.half_sin * node.half_cos + pt.half_cos * node.half_sin;
  const double s_minus =
      pt.half_sin * node.half_cos - pt.half_cos * node.half_sin;
  const double diff = -2.0 * s_plus * s_minus;
  if (std::abs(diff) < kNearNode) {
    const double d = pt.theta - node.theta;
    double dirichlet;
    if (std::abs(diff) < kSingularityGuard && n * std::abs(d) < 1e-3) {
      const double nn = double(n) * double(n);
      dirichlet = 1.0 - (nn - 0.25) * d * d / 6.0;
    } else {
      dirichlet = std::sin(n * d) / (2.0 * n * std::sin(0.5 * d));
    }
    return dirichlet * node.sin_theta / s_plus;
  }
  const double sign = (node.k % 2 == 1) ? 1.0 : -1.0;
  return sign * pt.cos_n * node.sin_theta / (double(n) * diff);
}

inline double kernel_value(int n, const NodeData& node, const Point& plus,
                           const Point& minus) {
  return 0.5 * (fundamental_value(n, node, plus) +
                fundamental_value(n, node, minus));
}

}  // namespace

NodeSet chebyshev_nodes(int n) {
  check_degree(n);
  NodeSet nodes;
  nodes.n = n;
  nodes.thetas.resize(std::size_t(n));
  for (int k = 1; k <= n; ++k) {
    nodes.thetas[std::size_t(k - 1)] = double(2 * k - 1) * kPi / double(2 * n);
  }
  return nodes;
}

KernelBasis::KernelBasis(int n) : n_(n), shift_(kPi / (2.0 * n)) {
  check_degree(n);
  nodes_.reserve(std::size_t(n));
  for (int k = 1; k <= n; ++k) nodes_.push_back(make_node(n, k));
}

double KernelBasis::fundamental(int k, double theta) const {
  check_index(n_, k);
  return fundamental_value(n_, nodes_[std::size_t(k - 1)], reduce(n_, theta));
}

double KernelBasis::kernel(int k, double theta) const {
  check_index(n_, k);
  return kernel_value(n_, nodes_[std::size_t(k - 1)],
                      reduce(n_, theta + shift_), reduce(n_, theta - shift_));
}

void KernelBasis::evaluate(double theta, KernelKind kind,
                           std::span<double> out) const {
  if (kind == KernelKind::lagrange) {
    const Point pt = reduce(n_, theta);
    for (const NodeData& node : nodes_) {
      out[std::size_t(node.k - 1)] = fundamental_value(n_, node, pt);
    }
    return;
  }
  const Point plus = reduce(n_, theta + shift_);
  const Point minus = reduce(n_, theta - shift_);
  for (const NodeData& node : nodes_) {
    out[std::size_t(node.k - 1)] = kernel_value(n_, node, plus, minus);
  }
}

double KernelBasis::combine(std::span<const double> coeffs, double theta,
                            KernelKind kind) const {
  CompensatedSum sum;
  if (kind == KernelKind::lagrange) {
    const Point pt = reduce(n_, theta);
    for (const NodeData& node : nodes_) {
      sum += coeffs[std::size_t(node.k - 1)] * fundamental_value(n_, node, pt);
    }
    return sum.value();
  }
  const Point plus = reduce(n_, theta + shift_);
  const Point minus = reduce(n_, theta - shift_);
  for (const NodeData& node : nodes_) {
    sum += coeffs[std::size_t(node.k - 1)] * kernel_value(n_, node, plus, minus);
  }
  return sum.value();
}

double KernelBasis::lebesgue(double theta, KernelKind kind) const {
  CompensatedSum sum;
  if (kind == KernelKind::lagrange) {
    const Point pt = reduce(n_, theta);
    for (const NodeData& node : nodes_) {
      sum += std::abs(fundamental_value(n_, node, pt));
    }
    return sum.value();
  }
  const Point plus = reduce(n_, theta + shift_);
  const Point minus = reduce(n_, theta - shift_);
  for (const NodeData& node : nodes_) {
    sum += std::abs(kernel_value(n_, node, plus, minus));
  }
  return sum.value();
}

double eval_fundamental(int n, int k, double theta) {
  check_degree(n);
  check_index(n, k);
  return fundamental_value(n, make_node(n, k), reduce(n, theta));
}

double eval_kernel(int n, int k, double theta) {
  check_degree(n);
  check_index(n, k);
  const double shift = kPi / (2.0 * n);
  return kernel_value(n, make_node(n, k), reduce(n, theta + shift),
                      reduce(n, theta - shift));
}

double lebesgue_function(int n, double theta, KernelKind kind) {
  return KernelBasis(n).lebesgue(theta, kind);
}

double lebesgue_constant(int n, KernelKind kind, const Grid& grid) {
  const KernelBasis basis(n);
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    best = std::max(best, basis.lebesgue(grid.point(i), kind));
  }
  return best;
}

}  // namespace gklab
