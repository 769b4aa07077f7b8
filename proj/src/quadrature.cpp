#include "fge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fge/constants.hpp"

namespace fge::quad {

GaussLegendreRule make_gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  const auto n = static_cast<std::size_t>(order);
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Tricomi initial guesses; roots come in
  // symmetric pairs.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * z * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const GaussLegendreRule& gauss_legendre(int order) {
  static const GaussLegendreRule r8 = make_gauss_legendre(8);
  static const GaussLegendreRule r16 = make_gauss_legendre(16);
  static const GaussLegendreRule r32 = make_gauss_legendre(32);
  static const GaussLegendreRule r64 = make_gauss_legendre(64);
  switch (order) {
    case 8: return r8;
    case 16: return r16;
    case 32: return r32;
    case 64: return r64;
    default: throw std::invalid_argument("unsupported Gauss-Legendre order " + std::to_string(order));
  }
}

std::vector<double> aligned_breakpoints(double upper, double step, std::span<const double> extra) {
  std::vector<double> points;
  if (upper / step > static_cast<double>(kMaxAlignedPanels)) step = upper / kMaxAlignedPanels;
  const auto count = static_cast<std::size_t>(std::ceil(upper / step));
  points.reserve(count + 1 + extra.size());
  for (std::size_t i = 0; i < count; ++i) {
    const double p = step * static_cast<double>(i);
    if (p >= upper) break;
    points.push_back(p);
  }
  points.push_back(upper);
  for (double e : extra) {
    if (e > 0.0 && e < upper) points.push_back(e);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<double> graded_points(double center, double width, double reach, double lo, double hi) {
  std::vector<double> points;
  if (!(center > lo && center < hi)) return points;
  points.push_back(center);
  if (!(width > 0.0)) return points;
  for (double d = width; d < reach; d *= 2.0) {
    if (center - d > lo) points.push_back(center - d);
    if (center + d < hi) points.push_back(center + d);
  }
  return points;
}

}  // namespace fge::quad
