#pragma once

// Independent reference computations used to check the library. None of
// these call into gklab.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

inline double node(int n, int k) { return (2.0 * k - 1.0) * pi / (2.0 * n); }

// Lagrange basis in x = cos(theta) from the product formula, in extended
// precision.
inline double lagrange_basis(int n, int k, double theta) {
  const long double pl = 3.141592653589793238462643383279502884L;
  auto node_l = [&](int j) { return (2.0L * j - 1.0L) * pl / (2.0L * n); };
  const long double x = std::cos(static_cast<long double>(theta));
  const long double xk = std::cos(node_l(k));
  long double v = 1.0L;
  for (int j = 1; j <= n; ++j) {
    if (j == k) continue;
    const long double xj = std::cos(node_l(j));
    v *= (x - xj) / (xk - xj);
  }
  return double(v);
}

inline double kernel(int n, int k, double theta) {
  const double s = pi / (2.0 * n);
  return 0.5 * (lagrange_basis(n, k, theta + s) + lagrange_basis(n, k, theta - s));
}

// Midpoint rule with `cells` cells.
inline double midpoint(const std::function<double(double)>& f, double a,
                       double b, long cells) {
  const double h = (b - a) / double(cells);
  long double sum = 0.0L;
  for (long i = 0; i < cells; ++i) sum += f(a + (double(i) + 0.5) * h);
  return double(sum) * h;
}

// Sup of |f(x) - f(y)| over sample pairs at index distance <= w.
inline double brute_modulus(const std::vector<double>& v, std::size_t w) {
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size() && j <= i + w; ++j) {
      best = std::max(best, std::abs(v[i] - v[j]));
    }
  }
  return best;
}

}  // namespace oracle
