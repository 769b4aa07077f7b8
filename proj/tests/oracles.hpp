#pragma once
// Independent reference computations used only by the tests. None of these
// call into the library's quadrature, root finders or closed forms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>

namespace fge::test {

inline double oracle_fermi(double z) {
  if (z > 700.0) return 0.0;
  if (z < -700.0) return 1.0;
  return 1.0 / (std::exp(z) + 1.0);
}

/// Compensated midpoint sum of g over [a, b] with `nodes` equal cells.
inline double midpoint_sum(const std::function<double(double)>& g, double a, double b,
                           std::size_t nodes) {
  const double h = (b - a) / static_cast<double>(nodes);
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t i = 0; i < nodes; ++i) {
    const double y = g(a + (static_cast<double>(i) + 0.5) * h) - carry;
    const double s = sum + y;
    carry = (s - sum) - y;
    sum = s;
  }
  return sum * h;
}

/// Compensated trapezoid sum with `nodes` points including both ends.
inline double trapezoid_sum(const std::function<double(double)>& g, double a, double b,
                            std::size_t nodes) {
  const double h = (b - a) / static_cast<double>(nodes - 1);
  double sum = 0.5 * (g(a) + g(b));
  double carry = 0.0;
  for (std::size_t i = 1; i + 1 < nodes; ++i) {
    const double y = g(a + static_cast<double>(i) * h) - carry;
    const double s = sum + y;
    carry = (s - sum) - y;
    sum = s;
  }
  return sum * h;
}

/// f(x, t) = (3/x) int_0^U u n(u) sin(ux) du on a fixed uniform grid, with
/// U past the point where the occupation drops below e^-50.
inline double riemann_exchange(double x, double t, double mu_tilde, bool relativistic,
                               std::size_t nodes = 10'000'000) {
  const double top = std::max(mu_tilde, 0.0) + 50.0 * t;
  const double upper = relativistic ? top : std::sqrt(top);
  auto g = [&](double u) {
    const double d = relativistic ? u : u * u;
    return u * oracle_fermi((d - mu_tilde) / t) * std::sin(u * x);
  };
  return 3.0 / x * midpoint_sum(g, 0.0, upper, nodes);
}

/// Plain evaluation of 3 (sin x - x cos x) / x^3 (valid away from x = 0).
inline double closed_form_exchange(double x) {
  return 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

/// Concurrence and entropy of formation written out independently.
inline double oracle_concurrence(double f) {
  const double c = (2.0 * f * f - 1.0) / (2.0 - f * f);
  return c > 0.0 ? c : 0.0;
}

inline double oracle_eof(double f) {
  const double c = oracle_concurrence(f);
  const double y = 0.5 + 0.5 * std::sqrt(std::max(1.0 - c * c, 0.0));
  if (y >= 1.0) return 0.0;
  return -y * std::log2(y) - (1.0 - y) * std::log2(1.0 - y);
}

/// Simple bisection for the tests' own root solves.
inline double bisect(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::abs(hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace fge::test
