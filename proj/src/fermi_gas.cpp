#include "fge/fermi_gas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "fge/constants.hpp"
#include "fge/errors.hpp"
#include "fge/quadrature.hpp"

namespace fge {

namespace {

constexpr double kThreePiSq = 3.0 * kPi * kPi;

// -ln(1e-14): occupation at the reduced cutoff.
constexpr double kCutoffLog = 32.23619130191664;
// The normalization integral weights the tail by u^2, so it is cut further out.
constexpr double kNormalizationCutoffLog = 46.0;

void require_positive(const char* quantity, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    detail::throw_domain(quantity, value, "must be positive and finite");
  }
}

void require_nonnegative(const char* quantity, double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    detail::throw_domain(quantity, value, "must be non-negative and finite");
  }
}

double cutoff_with_log(double mu_tilde, double t, GasRegime regime, double log_factor) {
  const double top = std::max(mu_tilde, 0.0) + t * log_factor;
  return regime == GasRegime::NonRelativistic ? std::sqrt(top) : top;
}

}  // namespace

std::string_view to_string(GasRegime regime) noexcept {
  return regime == GasRegime::NonRelativistic ? "nonrel" : "rel";
}

std::string_view to_string(MuMode mode) noexcept {
  return mode == MuMode::FermiEnergyApprox ? "fermi" : "exact";
}

double fermi_momentum_from_density(double n) {
  require_positive("density", n);
  return std::cbrt(kThreePiSq * n);
}

double density_from_fermi_momentum(double k_fermi) {
  require_positive("fermi momentum", k_fermi);
  return k_fermi * k_fermi * k_fermi / kThreePiSq;
}

double pressure_from_density(double n, GasRegime regime) {
  require_positive("density", n);
  const auto& c = constants();
  if (regime == GasRegime::NonRelativistic) {
    return std::pow(kThreePiSq, 2.0 / 3.0) * c.hbar * c.hbar / (5.0 * c.electron_mass) *
           std::pow(n, 5.0 / 3.0);
  }
  return std::cbrt(kThreePiSq) * c.hbar * c.light_speed / 4.0 * std::pow(n, 4.0 / 3.0);
}

double fermi_momentum_from_pressure(double pressure, GasRegime regime) {
  require_positive("pressure", pressure);
  const auto& c = constants();
  if (regime == GasRegime::NonRelativistic) {
    return std::pow(15.0 * kPi * kPi * c.electron_mass * pressure / (c.hbar * c.hbar), 0.2);
  }
  return std::pow(12.0 * kPi * kPi * pressure / (c.hbar * c.light_speed), 0.25);
}

double entanglement_distance(double k_fermi, double zeta) {
  require_positive("fermi momentum", k_fermi);
  require_positive("zeta", zeta);
  return zeta / k_fermi;
}

double pressure_from_entanglement_distance(double r_e, GasRegime regime, double zeta) {
  require_positive("entanglement distance", r_e);
  require_positive("zeta", zeta);
  const auto& c = constants();
  if (regime == GasRegime::NonRelativistic) {
    return std::pow(zeta, 5) * c.hbar * c.hbar / (15.0 * kPi * kPi * c.electron_mass) *
           std::pow(r_e, -5);
  }
  return std::pow(zeta, 4) * c.hbar * c.light_speed / (12.0 * kPi * kPi) * std::pow(r_e, -4);
}

double dispersion(double k, GasRegime regime) {
  require_nonnegative("wavenumber", k);
  const auto& c = constants();
  if (regime == GasRegime::NonRelativistic) {
    return c.hbar * c.hbar * k * k / (2.0 * c.electron_mass);
  }
  return c.hbar * c.light_speed * k;
}

double fermi_dirac(double z) noexcept {
  if (z > 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (std::exp(z) + 1.0);
}

double occupation(double k, double mu, double temperature, GasRegime regime) {
  require_nonnegative("temperature", temperature);
  const double eps = dispersion(k, regime);
  if (temperature == 0.0) {
    if (eps < mu) return 1.0;
    return eps == mu ? 0.5 : 0.0;
  }
  return fermi_dirac((eps - mu) / (constants().boltzmann * temperature));
}

double reduced_dispersion(double u, GasRegime regime) noexcept {
  return regime == GasRegime::NonRelativistic ? u * u : u;
}

ReducedOccupation::ReducedOccupation(double mu_tilde, double t, GasRegime regime) noexcept
    : mu_tilde_(mu_tilde), t_(t), edge_(reduced_fermi_edge(mu_tilde, regime)), regime_(regime) {}

double ReducedOccupation::operator()(double u) const noexcept {
  double excess = 0.0;
  if (regime_ == GasRegime::ExtremeRelativistic) {
    excess = u - mu_tilde_;  // exact near the edge
  } else if (edge_ > 0.0) {
    excess = (u - edge_) * (u + edge_);
  } else {
    excess = u * u - mu_tilde_;
  }
  return fermi_dirac(excess / t_);
}

double reduced_fermi_edge(double mu_tilde, GasRegime regime) noexcept {
  if (mu_tilde <= 0.0) return 0.0;
  return regime == GasRegime::NonRelativistic ? std::sqrt(mu_tilde) : mu_tilde;
}

double reduced_cutoff(double mu_tilde, double t, GasRegime regime) noexcept {
  return cutoff_with_log(mu_tilde, t, regime, kCutoffLog);
}

std::vector<double> reduced_edge_points(double mu_tilde, double t, GasRegime regime, double upper) {
  const double edge = reduced_fermi_edge(mu_tilde, regime);
  if (!(edge > 0.0)) return {};
  const double width = regime == GasRegime::NonRelativistic ? t / (2.0 * edge) : t;
  return quad::graded_points(edge, width, 1.0 / 16.0, 0.0, upper);
}

double normalization_integral(double mu_tilde, double t, GasRegime regime, double abs_tol) {
  require_nonnegative("reduced temperature", t);
  if (t == 0.0) {
    const double edge = reduced_fermi_edge(mu_tilde, regime);
    return edge * edge * edge / 3.0;
  }
  const double upper = cutoff_with_log(mu_tilde, t, regime, kNormalizationCutoffLog);
  const auto edge = reduced_edge_points(mu_tilde, t, regime, upper);
  const auto points = quad::aligned_breakpoints(upper, 1.0 / 16.0, edge);
  const ReducedOccupation occupation(mu_tilde, t, regime);
  auto integrand = [&](double u) { return u * u * occupation(u); };
  return quad::integrate_panels(integrand, points, abs_tol).value;
}

double reduced_chemical_potential(double t, GasRegime regime, MuMode mode) {
  require_nonnegative("reduced temperature", t);
  if (t == 0.0 || mode == MuMode::FermiEnergyApprox) return 1.0;

  auto excess = [&](double mu_tilde) {
    return normalization_integral(mu_tilde, t, regime) - 1.0 / 3.0;
  };
  const double lo = -50.0 * t;
  const double hi = 2.0;
  const double f_lo = excess(lo);
  const double f_hi = excess(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw SolverError(SolverError::Kind::NoSignChange, lo, hi,
                      fmt::format("chemical potential bracket [{:.6g}, {:.6g}] has no sign change "
                                  "at t = {:.6g} (excess {:.3g}, {:.3g})",
                                  lo, hi, t, f_lo, f_hi));
  }
  auto tolerance = [](double a, double b) { return std::abs(b - a) <= 1e-11; };
  const auto [a, b] = boost::math::tools::bisect(excess, lo, hi, tolerance);
  return 0.5 * (a + b);
}

double chemical_potential(double n, double temperature, GasRegime regime, MuMode mode) {
  const double k_fermi = fermi_momentum_from_density(n);
  require_nonnegative("temperature", temperature);
  const double eps_f = dispersion(k_fermi, regime);
  const double t = temperature * constants().boltzmann / eps_f;
  return reduced_chemical_potential(t, regime, mode) * eps_f;
}

FermiGasState::FermiGasState(double density, double temperature, GasRegime regime, MuMode mu_mode)
    : density_(density), temperature_(temperature), regime_(regime), mu_mode_(mu_mode) {
  require_positive("density", density);
  require_nonnegative("temperature", temperature);
  fermi_momentum_ = fermi_momentum_from_density(density);
  fermi_energy_ = dispersion(fermi_momentum_, regime);
  fermi_temperature_ = fermi_energy_ / constants().boltzmann;
  chemical_potential_ =
      reduced_chemical_potential(temperature / fermi_temperature_, regime, mu_mode) * fermi_energy_;
  pressure_ = pressure_from_density(density, regime);
}

double ideality_threshold_density(double charge_number) {
  if (!(charge_number >= 1.0)) detail::throw_domain("Z", charge_number, "must be at least 1");
  const auto& c = constants();
  const double coulomb = c.elementary_charge * c.elementary_charge / (4.0 * kPi * c.vacuum_permittivity);
  const double inverse_length = coulomb * c.electron_mass / (c.hbar * c.hbar);
  return inverse_length * inverse_length * inverse_length * charge_number * charge_number;
}

ValidityReport validity(const FermiGasState& state, double charge_number) {
  ValidityReport report;
  report.t_over_tF = state.reduced_temperature();
  report.density_ratio = state.density() / ideality_threshold_density(charge_number);
  report.degenerate = report.t_over_tF <= kDegeneracyThreshold;
  report.ideal = report.density_ratio >= kIdealityFactor;
  return report;
}

}  // namespace fge
