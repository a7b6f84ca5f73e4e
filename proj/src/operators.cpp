#include "gklab/operators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gklab/error.hpp"

namespace gklab {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> nodal_samples(const NodeSet& nodes, const FunctionSpec& f) {
  std::vector<double> out(nodes.thetas.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double v = f(nodes.thetas[i]);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::function_domain,
                  "'" + f.name + "' is not finite at node k=" +
                      std::to_string(i + 1));
    }
    out[i] = v;
  }
  return out;
}

}  // namespace

KantorovichMeans kantorovich_means(const NodeSet& nodes, const FunctionSpec& f,
                                   const QuadratureSpec& quad) {
  const double width = kPi / (2.0 * nodes.n);
  KantorovichMeans means;
  means.n = nodes.n;
  means.a.resize(nodes.thetas.size());
  for (std::size_t i = 0; i < means.a.size(); ++i) {
    const double lo = nodes.thetas[i];
    const double hi = std::min(lo + width, kPi);
    try {
      means.a[i] = integrate(f, lo, hi, quad) / width;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::quadrature_failure &&
          e.code() != ErrorCode::divergence) {
        throw;
      }
      throw Error(ErrorCode::quadrature_failure,
                  "panel k=" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return means;
}

KernelExpansion::KernelExpansion(int n, std::vector<double> coeffs,
                                 KernelKind kind)
    : basis_(n), coeffs_(std::move(coeffs)), kind_(kind) {
  if (coeffs_.size() != std::size_t(n)) {
    throw Error(ErrorCode::invalid_argument,
                "expansion needs exactly n coefficients");
  }
}

double KernelExpansion::operator()(double theta) const {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw Error(ErrorCode::domain, "operators are defined on [0, pi], got " +
                                       std::to_string(theta));
  }
  return basis_.combine(coeffs_, theta, kind_);
}

std::vector<double> KernelExpansion::apply(const Grid& grid) const {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = basis_.combine(coeffs_, grid.point(i), kind_);
  }
  return out;
}

FunctionSpec KernelExpansion::as_function(std::string name) const {
  FunctionSpec f;
  f.name = std::move(name);
  f.evaluator = [self = *this](double t) { return self(t); };
  f.resolution = 8 * degree();
  return f;
}

KernelExpansion lagrange_operator(const NodeSet& nodes, const FunctionSpec& f) {
  return KernelExpansion(nodes.n, nodal_samples(nodes, f), KernelKind::lagrange);
}

KernelExpansion grunwald_operator(const NodeSet& nodes, const FunctionSpec& f) {
  return KernelExpansion(nodes.n, nodal_samples(nodes, f), KernelKind::grunwald);
}

KernelExpansion gk_operator(const NodeSet& nodes, const FunctionSpec& f,
                            const QuadratureSpec& quad) {
  return KernelExpansion(nodes.n, kantorovich_means(nodes, f, quad).a,
                         KernelKind::grunwald);
}

double lagrange_apply(const NodeSet& nodes, const FunctionSpec& f,
                      double theta) {
  return lagrange_operator(nodes, f)(theta);
}

double grunwald_apply(const NodeSet& nodes, const FunctionSpec& f,
                      double theta) {
  return grunwald_operator(nodes, f)(theta);
}

double gk_apply(const NodeSet& nodes, const FunctionSpec& f, double theta,
                const QuadratureSpec& quad) {
  return gk_operator(nodes, f, quad)(theta);
}

KorovkinProbe korovkin_probe(int n, const Grid& grid,
                             const QuadratureSpec& quad) {
  const NodeSet nodes = chebyshev_nodes(n);
  const auto points = grid.points();
  auto probe = [&](const char* name) {
    const FunctionSpec g = corpus_get(name);
    const auto values = gk_operator(nodes, g, quad).apply(grid);
    double err = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      err = std::max(err, std::abs(values[i] - g(points[i])));
    }
    return err;
  };
  return {probe("const_one"), probe("linear"), probe("square")};
}

}  // namespace gklab
