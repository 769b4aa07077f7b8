#pragma once

namespace fge {

/// Physical constants in SI units (CODATA 2018 exact/recommended values,
/// IAU nominal solar radius).
struct PhysicalConstants {
  double hbar;                 // J s
  double electron_mass;        // kg
  double light_speed;          // m/s
  double boltzmann;            // J/K
  double hydrogen_mass;        // kg, 1H atom
  double elementary_charge;    // C
  double vacuum_permittivity;  // F/m
  double solar_mass;           // kg
  double solar_radius;         // m
};

inline constexpr PhysicalConstants kConstants{
    .hbar = 1.054571817e-34,
    .electron_mass = 9.1093837015e-31,
    .light_speed = 299792458.0,
    .boltzmann = 1.380649e-23,
    .hydrogen_mass = 1.6735328e-27,
    .elementary_charge = 1.602176634e-19,
    .vacuum_permittivity = 8.8541878128e-12,
    .solar_mass = 1.98892e30,
    .solar_radius = 6.957e8,
};

inline constexpr const PhysicalConstants& constants() noexcept { return kConstants; }

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace fge
