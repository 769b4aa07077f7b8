#pragma once

#include "fge/fermi_gas.hpp"

namespace fge {

/// Default absolute tolerance on f for the finite-temperature quadrature.
/// The CLI lets FGE_QUAD_TOL override it.
inline constexpr double kDefaultQuadTol = 1e-10;

/// Dimensionless point at which the exchange amplitude is evaluated:
/// x = k_F r, t = T/T_F, mu_tilde = mu/eps_F.
struct ReducedCoordinates {
  double x = 0.0;
  double t = 0.0;
  double mu_tilde = 1.0;
  GasRegime regime = GasRegime::NonRelativistic;
};

struct ExchangeAmplitude {
  double value = 1.0;
  ReducedCoordinates coords;
  double quadrature_error_estimate = 0.0;
};

struct ZetaResult {
  double zeta = 0.0;
  double t = 0.0;
  GasRegime regime = GasRegime::NonRelativistic;
  double residual = 0.0;  // |f(zeta, t)^2 - 1/2|
};

/// f(x, 0) = 3 (sin x - x cos x) / x^3, with its Taylor series below x = 1e-3.
double f_zero_temperature(double x);

/// f(x, t) = (3/x) * int_0^inf u n(u) sin(ux) du. For x < 1e-6 the r -> 0
/// limit 3 int u^2 n(u) du is returned instead. tol is an absolute bound on
/// the error of f and must lie in [1e-14, 1e-6].
ExchangeAmplitude f_finite_temperature(const ReducedCoordinates& coords, double tol = kDefaultQuadTol);

/// Fills mu_tilde for (t, regime, mode) and returns the coordinates.
ReducedCoordinates make_coordinates(double x, double t, GasRegime regime, MuMode mode);

/// Dispatches to the closed form at t = 0 and to quadrature otherwise.
ExchangeAmplitude exchange_amplitude(const ReducedCoordinates& coords, double tol = kDefaultQuadTol);

/// f at electron separation r in a gas held at degeneracy pressure P and
/// temperature T. Evaluated through the reduced coordinates.
ExchangeAmplitude f_from_pressure(double r, double pressure, double temperature, GasRegime regime,
                                  MuMode mode = MuMode::ExactNormalization,
                                  double tol = kDefaultQuadTol);

/// Prefactor gamma (non-rel) or gamma' (rel) such that
/// f = gamma / (r P^{3/5}) * I  or  gamma' / (r P^{3/4}) * I,
/// where I = int_0^inf k n_k sin(kr) dk.
double pressure_prefactor(GasRegime regime);

/// I = int_0^inf k n_k sin(kr) dk in SI units (1/m^2), integrated over k
/// with dimensional energies. T = 0 uses the closed form over [0, k_F].
double exchange_integral_dimensional(double r, double k_fermi, double temperature, double mu,
                                     GasRegime regime, double tol = kDefaultQuadTol);

/// 3 / (r k_F^3) * I, the amplitude computed without reduction.
double f_dimensional(double r, double k_fermi, double temperature, double mu, GasRegime regime,
                     double tol = kDefaultQuadTol);

/// f_from_pressure evaluated as the pressure prefactor times the
/// dimensional integral.
double f_from_pressure_dimensional(double r, double pressure, double temperature, GasRegime regime,
                                   MuMode mode = MuMode::ExactNormalization,
                                   double tol = kDefaultQuadTol);

/// Smallest x > 0 with f(x, t)^2 = 1/2. At t = 0 this is the closed-form
/// root (about 1.8148) for either regime.
ZetaResult solve_zeta(double t, GasRegime regime = GasRegime::NonRelativistic,
                      MuMode mode = MuMode::ExactNormalization);

/// Cached solve_zeta(0).zeta.
double zero_temperature_zeta();

}  // namespace fge
