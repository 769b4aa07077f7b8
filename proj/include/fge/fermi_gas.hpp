#pragma once

#include <string_view>
#include <vector>

namespace fge {

enum class GasRegime { NonRelativistic, ExtremeRelativistic };

/// How the chemical potential of a finite-temperature gas is fixed.
enum class MuMode {
  FermiEnergyApprox,   // mu = eps_F at every temperature
  ExactNormalization,  // mu chosen so the occupied states hold exactly n electrons
};

std::string_view to_string(GasRegime regime) noexcept;
std::string_view to_string(MuMode mode) noexcept;

/// Advisory thresholds for the degenerate (T << T_F) and ideal-gas
/// (n >> threshold) conditions. The raw ratios are always reported.
inline constexpr double kDegeneracyThreshold = 0.01;
inline constexpr double kIdealityFactor = 100.0;

// Relations among density, Fermi momentum, pressure and entanglement
// distance. SI units throughout; nonpositive inputs raise DomainError.

double fermi_momentum_from_density(double n);
double density_from_fermi_momentum(double k_fermi);
double pressure_from_density(double n, GasRegime regime);
double fermi_momentum_from_pressure(double pressure, GasRegime regime);
double entanglement_distance(double k_fermi, double zeta);
double pressure_from_entanglement_distance(double r_e, GasRegime regime, double zeta);

/// Single-particle energy eps(k): hbar^2 k^2 / 2m or hbar c k.
double dispersion(double k, GasRegime regime);

/// Fermi-Dirac occupation of momentum k. T = 0 is the exact step function
/// (1/2 at eps = mu).
double occupation(double k, double mu, double temperature, GasRegime regime);

/// 1 / (exp(z) + 1) without overflow for large |z|.
double fermi_dirac(double z) noexcept;

// Reduced variables: u = k/k_F, t = T/T_F, mu~ = mu/eps_F.

/// eps(u k_F)/eps_F: u^2 or u.
double reduced_dispersion(double u, GasRegime regime) noexcept;

/// n(u) = 1 / (exp((d(u) - mu~) / t) + 1). Near the edge u^2 - mu~ is taken
/// as (u - sqrt(mu~))(u + sqrt(mu~)), so rounding in u^2 is not amplified by 1/t.
class ReducedOccupation {
 public:
  ReducedOccupation(double mu_tilde, double t, GasRegime regime) noexcept;
  double operator()(double u) const noexcept;

 private:
  double mu_tilde_;
  double t_;
  double edge_;
  GasRegime regime_;
};

/// Momentum u at which reduced_dispersion(u) = mu~ (0 when mu~ <= 0).
double reduced_fermi_edge(double mu_tilde, GasRegime regime) noexcept;

/// Momentum beyond which the occupation is below 1e-14.
double reduced_cutoff(double mu_tilde, double t, GasRegime regime) noexcept;

/// Breakpoints graded geometrically around the reduced Fermi edge, from the
/// thermal width of the edge out to 1/16 on either side, clipped to (0, upper).
std::vector<double> reduced_edge_points(double mu_tilde, double t, GasRegime regime, double upper);

/// Integral of u^2 n(u) over [0, inf); equals 1/3 when mu~ conserves
/// particle number.
double normalization_integral(double mu_tilde, double t, GasRegime regime,
                              double abs_tol = 1e-13);

/// mu/eps_F at reduced temperature t. ExactNormalization bisects on the
/// bracket [-50 t, 2] to 1e-10; t = 0 returns exactly 1 in both modes.
double reduced_chemical_potential(double t, GasRegime regime, MuMode mode);

/// Chemical potential in joules for a gas of density n at temperature T.
double chemical_potential(double n, double temperature, GasRegime regime, MuMode mode);

/// Immutable thermodynamic state of an ideal electron gas.
class FermiGasState {
 public:
  FermiGasState(double density, double temperature, GasRegime regime,
                MuMode mu_mode = MuMode::ExactNormalization);

  double density() const noexcept { return density_; }
  double temperature() const noexcept { return temperature_; }
  GasRegime regime() const noexcept { return regime_; }
  MuMode mu_mode() const noexcept { return mu_mode_; }
  double fermi_momentum() const noexcept { return fermi_momentum_; }
  double fermi_energy() const noexcept { return fermi_energy_; }
  double fermi_temperature() const noexcept { return fermi_temperature_; }
  double chemical_potential() const noexcept { return chemical_potential_; }
  double pressure() const noexcept { return pressure_; }
  double reduced_temperature() const noexcept { return temperature_ / fermi_temperature_; }
  bool degeneracy_ok() const noexcept { return reduced_temperature() <= kDegeneracyThreshold; }

 private:
  double density_;
  double temperature_;
  GasRegime regime_;
  MuMode mu_mode_;
  double fermi_momentum_;
  double fermi_energy_;
  double fermi_temperature_;
  double chemical_potential_;
  double pressure_;
};

struct ValidityReport {
  bool degenerate = false;
  bool ideal = false;
  double t_over_tF = 0.0;
  double density_ratio = 0.0;  // n over the ideality threshold density
};

/// Density (q^2 m / (4 pi eps0 hbar^2))^3 Z^2 above which Coulomb energy is
/// small next to the Fermi energy.
double ideality_threshold_density(double charge_number);

ValidityReport validity(const FermiGasState& state, double charge_number);

}  // namespace fge
