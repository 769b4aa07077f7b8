#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fge/entanglement.hpp"

namespace fge {

/// A malformed sweep specification (usage error, distinct from DomainError).
class SweepSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SweepVariable { Pressure, Distance, Temperature };
enum class Spacing { Linear, Log };

struct SweepSpec {
  SweepVariable variable = SweepVariable::Pressure;
  double min = 0.0;
  double max = 0.0;
  int count = 2;
  Spacing spacing = Spacing::Linear;
  // Values held fixed; the swept one is ignored.
  double r = 1e-10;
  double pressure = 1e9;
  double temperature = 0.0;
  GasRegime regime = GasRegime::NonRelativistic;
  MuMode mu_mode = MuMode::ExactNormalization;
  double tol = kDefaultQuadTol;
};

struct SweepRow {
  double r = 0.0;
  double pressure = 0.0;
  double temperature = 0.0;
  double x = 0.0;
  double f = 0.0;
  double concurrence = 0.0;
  double entropy_of_formation = 0.0;
  bool entangled = false;
  double r_e = 0.0;
};

inline constexpr const char* kSweepCsvHeader = "r_m,P_Pa,T_K,x,f,C,EF_bits,entangled,re_m";

/// Throws SweepSpecError unless min < max, count >= 2 and log spacing has min > 0.
void validate(const SweepSpec& spec);

/// Grid values of the swept variable, endpoints included exactly.
std::vector<double> sweep_grid(const SweepSpec& spec);

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Zero-temperature non-relativistic pressure sweep at r = 1e-10 m, from the
/// pressure whose entanglement distance is 1e-8 m to ten times the pressure
/// whose entanglement distance equals r, 200 log-spaced points.
SweepSpec figure1_spec();

/// %.17g, which round-trips every double.
std::string format_double(double value);

/// Header line plus one LF-terminated line per row.
void write_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace fge
