#include "fge/sweep.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "fge/exchange.hpp"

namespace fge {

void validate(const SweepSpec& spec) {
  if (!std::isfinite(spec.min) || !std::isfinite(spec.max) || !(spec.min < spec.max)) {
    throw SweepSpecError(fmt::format("sweep range requires min < max (got {} and {})", spec.min, spec.max));
  }
  if (spec.count < 2) throw SweepSpecError(fmt::format("sweep count must be at least 2 (got {})", spec.count));
  if (spec.spacing == Spacing::Log && !(spec.min > 0.0)) {
    throw SweepSpecError(fmt::format("log spacing requires min > 0 (got {})", spec.min));
  }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> grid(static_cast<std::size_t>(spec.count));
  const double last = static_cast<double>(spec.count - 1);
  for (int i = 0; i < spec.count; ++i) {
    const double s = static_cast<double>(i) / last;
    if (spec.spacing == Spacing::Linear) {
      grid[i] = spec.min + s * (spec.max - spec.min);
    } else {
      grid[i] = std::exp(std::log(spec.min) + s * (std::log(spec.max) - std::log(spec.min)));
    }
  }
  grid.front() = spec.min;
  grid.back() = spec.max;
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  const auto grid = sweep_grid(spec);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double value : grid) {
    double r = spec.r;
    double pressure = spec.pressure;
    double temperature = spec.temperature;
    switch (spec.variable) {
      case SweepVariable::Pressure: pressure = value; break;
      case SweepVariable::Distance: r = value; break;
      case SweepVariable::Temperature: temperature = value; break;
    }
    const EntanglementReport rep = eos_evaluate(r, pressure, temperature, spec.regime, spec.mu_mode, spec.tol);
    rows.push_back(SweepRow{r, pressure, temperature, rep.x, rep.f, rep.concurrence,
                            rep.entropy_of_formation, rep.entangled, rep.r_e});
  }
  return rows;
}

SweepSpec figure1_spec() {
  constexpr double kSeparation = 1e-10;
  constexpr double kInitialEntanglementDistance = 1e-8;
  const double zeta = zero_temperature_zeta();
  SweepSpec spec;
  spec.variable = SweepVariable::Pressure;
  spec.spacing = Spacing::Log;
  spec.count = 200;
  spec.r = kSeparation;
  spec.temperature = 0.0;
  spec.regime = GasRegime::NonRelativistic;
  spec.mu_mode = MuMode::FermiEnergyApprox;
  spec.min = pressure_from_entanglement_distance(kInitialEntanglementDistance, spec.regime, zeta);
  spec.max = 10.0 * pressure_from_entanglement_distance(kSeparation, spec.regime, zeta);
  return spec;
}

std::string format_double(double value) { return fmt::format("{:.17g}", value); }

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    out << format_double(row.r) << ',' << format_double(row.pressure) << ','
        << format_double(row.temperature) << ',' << format_double(row.x) << ','
        << format_double(row.f) << ',' << format_double(row.concurrence) << ','
        << format_double(row.entropy_of_formation) << ',' << (row.entangled ? 1 : 0) << ','
        << format_double(row.r_e) << '\n';
  }
}

}  // namespace fge
