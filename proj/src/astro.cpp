#include "fge/astro.hpp"

#include <cmath>

#include "fge/constants.hpp"
#include "fge/errors.hpp"

namespace fge {

namespace {

void require_positive(const char* quantity, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    detail::throw_domain(quantity, value, "must be positive and finite");
  }
}

}  // namespace

DwarfReport dwarf_report(const WhiteDwarf& dwarf, double zeta, GasRegime regime) {
  require_positive("mass", dwarf.mass);
  require_positive("radius", dwarf.radius);
  require_positive("temperature", dwarf.surface_temperature);
  if (!(dwarf.protons >= 1.0)) detail::throw_domain("Z", dwarf.protons, "must be at least 1");
  if (!(dwarf.nucleons >= dwarf.protons) || !std::isfinite(dwarf.nucleons)) {
    detail::throw_domain("A", dwarf.nucleons, "must be at least Z");
  }
  const auto& c = constants();
  DwarfReport report;
  report.mass = dwarf.mass;
  report.radius = dwarf.radius;
  report.mass_density = dwarf.mass / (4.0 / 3.0 * kPi * std::pow(dwarf.radius, 3));
  report.electron_density = dwarf.protons * report.mass_density / (dwarf.nucleons * c.hydrogen_mass);

  const FermiGasState gas(report.electron_density, dwarf.surface_temperature, regime,
                          MuMode::FermiEnergyApprox);
  report.fermi_momentum = gas.fermi_momentum();
  report.fermi_temperature = gas.fermi_temperature();
  report.t_over_tF = gas.reduced_temperature();
  report.zeta = zeta;
  report.entanglement_distance = entanglement_distance(report.fermi_momentum, zeta);
  report.relativity_parameter = dispersion(report.fermi_momentum, GasRegime::NonRelativistic) /
                                (c.electron_mass * c.light_speed * c.light_speed);
  report.relativistic_warning = report.relativity_parameter > kRelativityWarningThreshold;
  report.validity = validity(gas, dwarf.protons);
  return report;
}

double scaling_law_re(double mass, double radius, const DwarfReport& reference) {
  require_positive("mass", mass);
  require_positive("radius", radius);
  require_positive("reference mass", reference.mass);
  require_positive("reference radius", reference.radius);
  return reference.entanglement_distance * (radius / reference.radius) *
         std::cbrt(reference.mass / mass);
}

double critical_mass_re_equals_R(const DwarfReport& reference, double radius_ref, double mass_ref) {
  require_positive("reference entanglement distance", reference.entanglement_distance);
  require_positive("reference radius", radius_ref);
  require_positive("reference mass", mass_ref);
  const double scale = reference.entanglement_distance * std::cbrt(mass_ref) / radius_ref;
  return scale * scale * scale;
}

WhiteDwarf sirius_b() {
  const auto& c = constants();
  return WhiteDwarf{.mass = c.solar_mass,
                    .radius = 0.008 * c.solar_radius,
                    .surface_temperature = 27000.0,
                    .protons = 6.0,
                    .nucleons = 12.0};
}

}  // namespace fge
