#include "fge/exchange.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>
#include <fmt/format.h>

#include "fge/constants.hpp"
#include "fge/errors.hpp"
#include "fge/quadrature.hpp"

namespace fge {

namespace {

constexpr double kSeriesCrossover = 1e-3;
constexpr double kSmallSeparation = 1e-6;
constexpr double kCutoffLog = 32.23619130191664;  // -ln(1e-14)
constexpr double kPanelsPerUnit = 64.0;
constexpr double kZetaScanLo = 1e-3;
constexpr double kZetaScanHi = 3.0;
constexpr double kZetaScanStep = 0.1;
constexpr double kZetaResidualTol = 1e-10;
constexpr double kZetaQuadTol = 1e-13;

void check_tol(double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-6)) {
    detail::throw_domain("quadrature tolerance", tol, "must lie in [1e-14, 1e-6]");
  }
}

double sin_minus_x_cos_series(double x) {
  // sum_{k>=1} (-1)^{k+1} 2k x^{2k+1} / (2k+1)!, used for x < 1 where the
  // direct difference loses digits.
  const double x2 = x * x;
  double term = x * x2 / 3.0;  // k = 1: 2 x^3 / 3!
  double sum = term;
  for (int k = 2; k < 30; ++k) {
    // ratio of consecutive terms: -(2k / (2k-2)) x^2 / ((2k)(2k+1))
    term *= -x2 / ((2.0 * k - 2.0) * (2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double f_zero_temperature(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) detail::throw_domain("x", x, "must be non-negative");
  if (x < kSeriesCrossover) {
    const double x2 = x * x;
    return 1.0 - x2 / 10.0 + x2 * x2 / 280.0;
  }
  if (x < 1.0) return 3.0 * sin_minus_x_cos_series(x) / (x * x * x);
  return 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

ExchangeAmplitude f_finite_temperature(const ReducedCoordinates& coords, double tol) {
  check_tol(tol);
  if (!(coords.x >= 0.0) || !std::isfinite(coords.x)) {
    detail::throw_domain("x", coords.x, "must be non-negative");
  }
  if (!(coords.t > 0.0) || !std::isfinite(coords.t)) {
    detail::throw_domain("reduced temperature", coords.t, "must be positive for the quadrature path");
  }
  const double t = coords.t;
  const double mu = coords.mu_tilde;
  const GasRegime regime = coords.regime;
  const double upper = reduced_cutoff(mu, t, regime);
  const auto edge = reduced_edge_points(mu, t, regime, upper);

  const ReducedOccupation occupation(mu, t, regime);

  ExchangeAmplitude out;
  out.coords = coords;
  if (coords.x < kSmallSeparation) {
    auto integrand = [&](double u) { return u * u * occupation(u); };
    const auto points = quad::aligned_breakpoints(upper, 1.0 / kPanelsPerUnit, edge);
    const auto r = quad::integrate_panels(integrand, points, tol / 3.0);
    out.value = 3.0 * r.value;
    out.quadrature_error_estimate = 3.0 * r.error_estimate;
    return out;
  }

  const double x = coords.x;
  auto integrand = [&](double u) {
    return u * occupation(u) * std::sin(u * x);
  };
  const double step = std::max(kPi / x, 1.0 / kPanelsPerUnit);
  const auto points = quad::aligned_breakpoints(upper, step, edge);
  const auto r = quad::integrate_panels(integrand, points, tol * x / 3.0);
  out.value = 3.0 * r.value / x;
  out.quadrature_error_estimate = 3.0 * r.error_estimate / x;
  return out;
}

ReducedCoordinates make_coordinates(double x, double t, GasRegime regime, MuMode mode) {
  if (!(x >= 0.0) || !std::isfinite(x)) detail::throw_domain("x", x, "must be non-negative");
  if (!(t >= 0.0) || !std::isfinite(t)) {
    detail::throw_domain("reduced temperature", t, "must be non-negative");
  }
  return ReducedCoordinates{x, t, reduced_chemical_potential(t, regime, mode), regime};
}

ExchangeAmplitude exchange_amplitude(const ReducedCoordinates& coords, double tol) {
  if (coords.t == 0.0) {
    ExchangeAmplitude out;
    out.coords = coords;
    out.coords.mu_tilde = 1.0;
    out.value = f_zero_temperature(coords.x);
    return out;
  }
  return f_finite_temperature(coords, tol);
}

ExchangeAmplitude f_from_pressure(double r, double pressure, double temperature, GasRegime regime,
                                  MuMode mode, double tol) {
  if (!(r > 0.0) || !std::isfinite(r)) detail::throw_domain("distance r", r, "must be positive");
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    detail::throw_domain("temperature", temperature, "must be non-negative");
  }
  check_tol(tol);
  const double k_fermi = fermi_momentum_from_pressure(pressure, regime);
  const double eps_f = dispersion(k_fermi, regime);
  const double t = constants().boltzmann * temperature / eps_f;
  return exchange_amplitude(make_coordinates(k_fermi * r, t, regime, mode), tol);
}

double pressure_prefactor(GasRegime regime) {
  const auto& c = constants();
  if (regime == GasRegime::NonRelativistic) {
    return std::pow(c.hbar * c.hbar * std::pow(3.0, 5.0 / 3.0) / (15.0 * kPi * kPi * c.electron_mass),
                    0.6);
  }
  return std::pow(c.hbar * c.light_speed * std::pow(3.0, 4.0 / 3.0) / (12.0 * kPi * kPi), 0.75);
}

double exchange_integral_dimensional(double r, double k_fermi, double temperature, double mu,
                                     GasRegime regime, double tol) {
  if (!(r > 0.0) || !std::isfinite(r)) detail::throw_domain("distance r", r, "must be positive");
  if (!(k_fermi > 0.0) || !std::isfinite(k_fermi)) {
    detail::throw_domain("fermi momentum", k_fermi, "must be positive");
  }
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    detail::throw_domain("temperature", temperature, "must be non-negative");
  }
  check_tol(tol);
  if (temperature == 0.0) {
    const double kr = k_fermi * r;
    return (std::sin(kr) - kr * std::cos(kr)) / (r * r);
  }
  const auto& c = constants();
  const double thermal = c.boltzmann * temperature;
  const double top = std::max(mu, 0.0) + thermal * kCutoffLog;
  double k_max = 0.0;
  double k_edge = 0.0;
  double edge_width = 0.0;
  if (regime == GasRegime::NonRelativistic) {
    k_max = std::sqrt(2.0 * c.electron_mass * top) / c.hbar;
    if (mu > 0.0) {
      k_edge = std::sqrt(2.0 * c.electron_mass * mu) / c.hbar;
      edge_width = thermal * c.electron_mass / (c.hbar * c.hbar * k_edge);
    }
  } else {
    k_max = top / (c.hbar * c.light_speed);
    if (mu > 0.0) {
      k_edge = mu / (c.hbar * c.light_speed);
      edge_width = thermal / (c.hbar * c.light_speed);
    }
  }
  const auto edge = quad::graded_points(k_edge, edge_width, k_fermi / 16.0, 0.0, k_max);
  // eps(k) - mu, factored about k_edge for the quadratic dispersion.
  auto excess = [&](double k) {
    if (k_edge <= 0.0) return dispersion(k, regime) - mu;
    if (regime == GasRegime::ExtremeRelativistic) return c.hbar * c.light_speed * (k - k_edge);
    return c.hbar * c.hbar * (k - k_edge) * (k + k_edge) / (2.0 * c.electron_mass);
  };
  auto integrand = [&](double k) { return k * fermi_dirac(excess(k) / thermal) * std::sin(k * r); };
  const double step = std::max(kPi / r, k_fermi / kPanelsPerUnit);
  const auto points = quad::aligned_breakpoints(k_max, step, edge);
  return quad::integrate_panels(integrand, points, tol * r * k_fermi * k_fermi * k_fermi / 3.0).value;
}

double f_dimensional(double r, double k_fermi, double temperature, double mu, GasRegime regime,
                     double tol) {
  const double integral = exchange_integral_dimensional(r, k_fermi, temperature, mu, regime, tol);
  return 3.0 / (r * k_fermi * k_fermi * k_fermi) * integral;
}

double f_from_pressure_dimensional(double r, double pressure, double temperature, GasRegime regime,
                                   MuMode mode, double tol) {
  const double k_fermi = fermi_momentum_from_pressure(pressure, regime);
  const double eps_f = dispersion(k_fermi, regime);
  double mu = eps_f;
  if (temperature > 0.0) {
    mu *= reduced_chemical_potential(constants().boltzmann * temperature / eps_f, regime, mode);
  }
  const double integral = exchange_integral_dimensional(r, k_fermi, temperature, mu, regime, tol);
  const double exponent = regime == GasRegime::NonRelativistic ? 0.6 : 0.75;
  return pressure_prefactor(regime) / (r * std::pow(pressure, exponent)) * integral;
}

ZetaResult solve_zeta(double t, GasRegime regime, MuMode mode) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    detail::throw_domain("reduced temperature", t, "must be non-negative");
  }
  const ReducedCoordinates base = make_coordinates(0.0, t, regime, mode);
  auto f_at = [&](double x) {
    ReducedCoordinates c = base;
    c.x = x;
    return exchange_amplitude(c, kZetaQuadTol).value;
  };
  auto g = [&](double x) {
    const double f = f_at(x);
    return f * f - 0.5;
  };

  const double f_origin = f_at(0.0);
  if (!(f_origin * f_origin > 0.5)) {
    throw SolverError(SolverError::Kind::NoRoot, 0.0, kZetaScanHi,
                      fmt::format("no entanglement at any separation: f(0, t = {:.6g})^2 = {:.6g} "
                                  "does not exceed 1/2",
                                  t, f_origin * f_origin));
  }

  double lo = kZetaScanLo;
  double g_lo = g(lo);
  if (!(g_lo > 0.0)) {
    throw SolverError(SolverError::Kind::NoRoot, kZetaScanLo, kZetaScanHi,
                      fmt::format("f^2 - 1/2 = {:.3g} is already non-positive at x = {:.3g} "
                                  "(t = {:.6g})",
                                  g_lo, lo, t));
  }
  double hi = lo;
  double g_hi = g_lo;
  bool bracketed = false;
  while (hi < kZetaScanHi) {
    lo = hi;
    g_lo = g_hi;
    hi = std::min(lo + kZetaScanStep, kZetaScanHi);
    g_hi = g(hi);
    if (g_hi <= 0.0) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    throw SolverError(SolverError::Kind::BracketTooSmall, kZetaScanLo, kZetaScanHi,
                      fmt::format("f^2 - 1/2 stays positive on [{:.3g}, {:.3g}] at t = {:.6g}",
                                  kZetaScanLo, kZetaScanHi, t));
  }

  double root = hi;
  double residual = std::abs(g_hi);
  if (g_hi != 0.0) {
    std::uintmax_t max_iter = 200;
    auto tolerance = [](double a, double b) {
      return std::abs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(a);
    };
    const auto [a, b] = boost::math::tools::toms748_solve(g, lo, hi, g_lo, g_hi, tolerance, max_iter);
    root = a;
    residual = std::abs(g(a));
    for (double candidate : {b, 0.5 * (a + b)}) {
      const double res = std::abs(g(candidate));
      if (res < residual) {
        root = candidate;
        residual = res;
      }
    }
  }
  if (!(residual < kZetaResidualTol)) {
    throw SolverError(SolverError::Kind::NoSignChange, lo, hi,
                      fmt::format("zeta refinement stalled at x = {:.17g} with residual {:.3g}", root,
                                  residual));
  }
  return ZetaResult{root, t, regime, residual};
}

double zero_temperature_zeta() {
  static const double zeta = solve_zeta(0.0).zeta;
  return zeta;
}

}  // namespace fge
