#pragma once

#include "fge/fermi_gas.hpp"

namespace fge {

/// Uniform-density white dwarf.
struct WhiteDwarf {
  double mass = 0.0;                 // kg
  double radius = 0.0;               // m
  double surface_temperature = 0.0;  // K
  double protons = 6.0;              // Z
  double nucleons = 12.0;            // A
};

/// Electron gas inside a white dwarf and its entanglement distance.
struct DwarfReport {
  double mass = 0.0;
  double radius = 0.0;
  double mass_density = 0.0;      // kg/m^3
  double electron_density = 0.0;  // 1/m^3
  double fermi_momentum = 0.0;    // 1/m
  double fermi_temperature = 0.0;
  double t_over_tF = 0.0;
  double zeta = 0.0;
  double entanglement_distance = 0.0;  // m
  double relativity_parameter = 0.0;   // eps_F / (m c^2), non-rel dispersion
  bool relativistic_warning = false;   // relativity_parameter > 0.1
  ValidityReport validity;
};

inline constexpr double kRelativityWarningThreshold = 0.1;

/// rho = M / (4/3 pi R^3), n = Z rho / (A m_H), r_e = zeta / k_F.
DwarfReport dwarf_report(const WhiteDwarf& dwarf, double zeta,
                         GasRegime regime = GasRegime::NonRelativistic);

/// r_e scaled from a reference dwarf of the same composition: r_e ~ R M^{-1/3}.
double scaling_law_re(double mass, double radius, const DwarfReport& reference);

/// Mass at which the calibrated scaling r_e = c R M^{-1/3} gives r_e = R,
/// i.e. (r_e,ref M_ref^{1/3} / R_ref)^3.
double critical_mass_re_equals_R(const DwarfReport& reference, double radius_ref, double mass_ref);

/// Sirius B as a carbon-oxygen dwarf: 1 solar mass, 0.008 solar radii, 27000 K.
WhiteDwarf sirius_b();

}  // namespace fge
