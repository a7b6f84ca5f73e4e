#pragma once

#include <vector>

#include "gklab/corpus.hpp"
#include "gklab/kernels.hpp"
#include "gklab/numerics.hpp"

namespace gklab {

/// Panel means a[k] = (2n/pi) * int_{theta_k}^{theta_k + pi/(2n)} f.
struct KantorovichMeans {
  int n = 0;
  std::vector<double> a;
};

KantorovichMeans kantorovich_means(const NodeSet& nodes, const FunctionSpec& f,
                                   const QuadratureSpec& quad = {});

/// sum_k c_k K_k(theta) for fixed coefficients, where K_k is either the
/// fundamental polynomial or the Grunwald kernel. The three operator
/// families differ only in how the coefficients are produced.
class KernelExpansion {
 public:
  KernelExpansion(int n, std::vector<double> coeffs, KernelKind kind);

  /// Rejects theta outside [0, pi] with a domain error.
  double operator()(double theta) const;
  std::vector<double> apply(const Grid& grid) const;

  int degree() const noexcept { return basis_.degree(); }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  KernelKind kind() const noexcept { return kind_; }

  /// The expansion as a FunctionSpec on [0, pi], with `resolution` set so
  /// that quadrature panels resolve its oscillation.
  FunctionSpec as_function(std::string name) const;

 private:
  KernelBasis basis_;
  std::vector<double> coeffs_;
  KernelKind kind_;
};

/// L_n f: nodal samples against P_k.
KernelExpansion lagrange_operator(const NodeSet& nodes, const FunctionSpec& f);
/// G_n f: nodal samples against S_{k,n}.
KernelExpansion grunwald_operator(const NodeSet& nodes, const FunctionSpec& f);
/// GK_n f: panel means against S_{k,n}. The means are computed once here.
KernelExpansion gk_operator(const NodeSet& nodes, const FunctionSpec& f,
                            const QuadratureSpec& quad = {});

double lagrange_apply(const NodeSet& nodes, const FunctionSpec& f,
                      double theta);
double grunwald_apply(const NodeSet& nodes, const FunctionSpec& f,
                      double theta);
double gk_apply(const NodeSet& nodes, const FunctionSpec& f, double theta,
                const QuadratureSpec& quad = {});

struct KorovkinProbe {
  double e0 = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
};

/// Sup-grid errors of GK_n on the test functions 1, theta, theta^2.
KorovkinProbe korovkin_probe(int n, const Grid& grid,
                             const QuadratureSpec& quad = {});

}  // namespace gklab
