#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fge/errors.hpp"

namespace fge::quad {

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t order() const noexcept { return nodes.size(); }
};

GaussLegendreRule make_gauss_legendre(int order);

/// Shared immutable rules for the orders used in this library (8, 16, 32, 64).
const GaussLegendreRule& gauss_legendre(int order);

template <class F>
double apply_rule(const GaussLegendreRule& rule, F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.order(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

namespace detail {
// Rule value and the integral of |f| under the same rule.
template <class F>
std::pair<double, double> apply_rule_with_mass(const GaussLegendreRule& rule, F&& f, double a,
                                               double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < rule.order(); ++i) {
    const double v = rule.weights[i] * f(mid + half * rule.nodes[i]);
    sum += v;
    mass += std::abs(v);
  }
  return {half * sum, std::abs(half) * mass};
}
}  // namespace detail

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

struct PanelOptions {
  int fine_order = 16;
  int coarse_order = 8;
  std::size_t panel_budget = 20000;
  // A panel is also accepted once its rules agree to this fraction of the
  // panel's absolute mass; below that the integrand's own rounding dominates.
  double relative_floor = 1e-12;
};

/// Integrates f over consecutive panels [breakpoints[i], breakpoints[i+1]].
/// Each panel is evaluated with a fine and a coarse Gauss-Legendre rule; the
/// difference is the panel error estimate. A panel whose estimate exceeds its
/// share of abs_tol (proportional to its width) is bisected. Panels are
/// summed in left-to-right order, so results are deterministic.
///
/// Throws QuadratureError when the panel budget is exhausted.
template <class F>
QuadratureResult integrate_panels(F&& f, std::span<const double> breakpoints, double abs_tol,
                                  const PanelOptions& options = {}) {
  const GaussLegendreRule& fine = gauss_legendre(options.fine_order);
  const GaussLegendreRule& coarse = gauss_legendre(options.coarse_order);
  QuadratureResult result;
  if (breakpoints.size() < 2) return result;
  const double total_width = breakpoints.back() - breakpoints.front();
  if (!(total_width > 0.0)) return result;
  const double density = abs_tol / total_width;

  struct Panel {
    double a;
    double b;
  };
  std::vector<Panel> stack;
  for (std::size_t i = breakpoints.size() - 1; i > 0; --i) {
    if (breakpoints[i] > breakpoints[i - 1]) stack.push_back({breakpoints[i - 1], breakpoints[i]});
  }

  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const auto [hi, mass] = detail::apply_rule_with_mass(fine, f, p.a, p.b);
    const double lo = apply_rule(coarse, f, p.a, p.b);
    const double err = std::abs(hi - lo);
    const double width = p.b - p.a;
    const double mid = 0.5 * (p.a + p.b);
    const bool resolvable = mid > p.a && mid < p.b && width > 1e-14 * std::abs(mid);
    if (err <= density * width || err <= options.relative_floor * mass || !resolvable) {
      result.value += hi;
      result.error_estimate += err;
      ++result.panels;
      continue;
    }
    if (result.panels + stack.size() + 2 > options.panel_budget) {
      throw QuadratureError(result.error_estimate + err,
                            "quadrature did not converge within " +
                                std::to_string(options.panel_budget) +
                                " panels; achieved error estimate " +
                                std::to_string(result.error_estimate + err));
    }
    // Right half first so the left half is processed next.
    stack.push_back({mid, p.b});
    stack.push_back({p.a, mid});
  }
  return result;
}

inline constexpr std::size_t kMaxAlignedPanels = 4096;

/// Multiples of step in [0, upper), then upper, merged with extra points
/// inside (0, upper). Sorted, duplicates removed. The step is widened when
/// it would give more than kMaxAlignedPanels panels.
std::vector<double> aligned_breakpoints(double upper, double step, std::span<const double> extra = {});

/// Points center +/- width * 2^k (k = 0, 1, ...) while width * 2^k < reach,
/// clipped to (lo, hi), plus center itself. Used to resolve a feature of
/// known width (a Fermi edge) that a coarse panel grid would step over.
std::vector<double> graded_points(double center, double width, double reach, double lo, double hi);

}  // namespace fge::quad
