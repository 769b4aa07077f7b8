// fge: entanglement of electron pairs in a degenerate Fermi gas.
//
// Exit codes: 0 success, 1 domain or numerical error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fge/astro.hpp"
#include "fge/constants.hpp"
#include "fge/entanglement.hpp"
#include "fge/errors.hpp"
#include "fge/exchange.hpp"
#include "fge/sweep.hpp"

namespace {

using nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, fge::GasRegime> kRegimes{
    {"nonrel", fge::GasRegime::NonRelativistic}, {"rel", fge::GasRegime::ExtremeRelativistic}};
const std::map<std::string, fge::MuMode> kMuModes{
    {"fermi", fge::MuMode::FermiEnergyApprox}, {"exact", fge::MuMode::ExactNormalization}};
const std::map<std::string, fge::Measure> kMeasures{
    {"concurrence", fge::Measure::Concurrence}, {"eof", fge::Measure::EntropyOfFormation}};
const std::map<std::string, fge::SweepVariable> kVariables{
    {"pressure", fge::SweepVariable::Pressure},
    {"distance", fge::SweepVariable::Distance},
    {"temperature", fge::SweepVariable::Temperature}};
const std::map<std::string, fge::Spacing> kSpacings{{"linear", fge::Spacing::Linear},
                                                    {"log", fge::Spacing::Log}};

double default_tolerance() {
  const char* env = std::getenv("FGE_QUAD_TOL");
  if (env == nullptr || *env == '\0') return fge::kDefaultQuadTol;
  try {
    std::size_t used = 0;
    const double tol = std::stod(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return tol;
  } catch (const std::exception&) {
    throw UsageError(std::string("FGE_QUAD_TOL is not a number: ") + env);
  }
}

struct GasOptions {
  std::string regime = "nonrel";
  std::string mu_mode = "exact";
  double tol = fge::kDefaultQuadTol;

  void add_to(CLI::App* cmd, bool with_tol = true) {
    cmd->add_option("--regime", regime, "Gas regime")->check(CLI::IsMember({"nonrel", "rel"}));
    cmd->add_option("--mu-mode", mu_mode, "Chemical potential: fermi (mu = eps_F) or exact")
        ->check(CLI::IsMember({"fermi", "exact"}));
    if (with_tol) cmd->add_option("--tol", tol, "Absolute quadrature tolerance on f");
  }
  fge::GasRegime gas_regime() const { return kRegimes.at(regime); }
  fge::MuMode mode() const { return kMuModes.at(mu_mode); }
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json to_json(const fge::ValidityReport& v) {
  return json{{"degenerate", v.degenerate},
              {"ideal", v.ideal},
              {"t_over_tF", v.t_over_tF},
              {"density_ratio", v.density_ratio}};
}

void write_rows(const std::string& path, const std::vector<fge::SweepRow>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw fge::DomainError("cannot open output path '" + path + "' for writing");
  fge::write_csv(out, rows);
  out.flush();
  if (!out) throw fge::DomainError("failed writing output path '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise electron entanglement in a degenerate Fermi gas"};
  app.require_subcommand(1);

  double tol_default = fge::kDefaultQuadTol;
  try {
    tol_default = default_tolerance();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  // eval
  auto* eval = app.add_subcommand("eval", "Entanglement of one electron pair at (r, P, T)");
  double eval_r = 0.0;
  double eval_p = 0.0;
  double eval_t = 0.0;
  GasOptions eval_gas{.tol = tol_default};
  eval->add_option("--r", eval_r, "Electron separation [m]")->required();
  eval->add_option("--P", eval_p, "Degeneracy pressure [Pa]")->required();
  eval->add_option("--T", eval_t, "Temperature [K]");
  eval_gas.add_to(eval);

  // zeta
  auto* zeta = app.add_subcommand("zeta", "Entanglement-distance constant zeta(t)");
  double zeta_t = 0.0;
  GasOptions zeta_gas;
  zeta->add_option("--t", zeta_t, "Reduced temperature T/T_F");
  zeta_gas.add_to(zeta, false);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate a grid over one of r, P or T and write CSV");
  fge::SweepSpec sweep_spec;
  std::string sweep_var;
  std::string sweep_spacing = "linear";
  std::string sweep_out;
  GasOptions sweep_gas{.tol = tol_default};
  sweep->add_option("--var", sweep_var, "Swept quantity")
      ->required()
      ->check(CLI::IsMember({"pressure", "distance", "temperature"}));
  sweep->add_option("--min", sweep_spec.min, "Lower end of the range")->required();
  sweep->add_option("--max", sweep_spec.max, "Upper end of the range")->required();
  sweep->add_option("--count", sweep_spec.count, "Number of grid points")->required();
  sweep->add_option("--spacing", sweep_spacing, "Grid spacing")->check(CLI::IsMember({"linear", "log"}));
  sweep->add_option("--r", sweep_spec.r, "Fixed electron separation [m]");
  sweep->add_option("--P", sweep_spec.pressure, "Fixed degeneracy pressure [Pa]");
  sweep->add_option("--T", sweep_spec.temperature, "Fixed temperature [K]");
  sweep->add_option("--out", sweep_out, "Output CSV path")->required();
  sweep_gas.add_to(sweep);

  // figure1
  auto* figure1 = app.add_subcommand(
      "figure1", "C and E_F versus pressure at T = 0, r = 1e-10 m (non-relativistic)");
  std::string figure1_out;
  figure1->add_option("--out", figure1_out, "Output CSV path")->required();

  // dwarf
  auto* dwarf = app.add_subcommand("dwarf", "Entanglement distance inside a uniform white dwarf");
  fge::WhiteDwarf dwarf_in;
  double m_solar = 0.0;
  double r_solar = 0.0;
  double dwarf_zeta = 0.0;
  std::string dwarf_regime = "nonrel";
  auto* m_kg = dwarf->add_option("--M", dwarf_in.mass, "Mass [kg]");
  auto* m_sol = dwarf->add_option("--M-solar", m_solar, "Mass [solar masses]")->excludes(m_kg);
  auto* r_m = dwarf->add_option("--R", dwarf_in.radius, "Radius [m]");
  auto* r_sol = dwarf->add_option("--R-solar", r_solar, "Radius [solar radii]")->excludes(r_m);
  dwarf->add_option("--T", dwarf_in.surface_temperature, "Temperature [K]")->required();
  dwarf->add_option("--Z", dwarf_in.protons, "Protons per nucleus");
  dwarf->add_option("--A", dwarf_in.nucleons, "Nucleons per nucleus");
  dwarf->add_option("--zeta", dwarf_zeta, "Entanglement-distance constant (default: zeta at T = 0)");
  dwarf->add_option("--regime", dwarf_regime, "Gas regime")->check(CLI::IsMember({"nonrel", "rel"}));

  // avg
  auto* avg = app.add_subcommand("avg", "Entanglement averaged over 0 <= x <= zeta(t)");
  double avg_t = 0.0;
  std::string avg_measure = "concurrence";
  GasOptions avg_gas{.tol = tol_default};
  avg->add_option("--t", avg_t, "Reduced temperature T/T_F");
  avg->add_option("--measure", avg_measure, "concurrence or eof")
      ->check(CLI::IsMember({"concurrence", "eof"}));
  avg_gas.add_to(avg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      const auto rep = fge::eos_evaluate(eval_r, eval_p, eval_t, eval_gas.gas_regime(), eval_gas.mode(),
                                         eval_gas.tol);
      print(json{{"f", rep.f},
                 {"entangled", rep.entangled},
                 {"concurrence", rep.concurrence},
                 {"entropy_of_formation", rep.entropy_of_formation},
                 {"x", rep.x},
                 {"t", rep.t},
                 {"r_e", rep.r_e},
                 {"r", rep.r},
                 {"pressure", rep.pressure},
                 {"temperature", rep.temperature},
                 {"regime", fge::to_string(rep.regime)},
                 {"mu_mode", eval_gas.mu_mode}});
    } else if (zeta->parsed()) {
      const auto z = fge::solve_zeta(zeta_t, zeta_gas.gas_regime(), zeta_gas.mode());
      print(json{{"zeta", z.zeta},
                 {"t", z.t},
                 {"regime", fge::to_string(z.regime)},
                 {"mu_mode", zeta_gas.mu_mode},
                 {"residual", z.residual}});
    } else if (sweep->parsed()) {
      sweep_spec.variable = kVariables.at(sweep_var);
      sweep_spec.spacing = kSpacings.at(sweep_spacing);
      sweep_spec.regime = sweep_gas.gas_regime();
      sweep_spec.mu_mode = sweep_gas.mode();
      sweep_spec.tol = sweep_gas.tol;
      try {
        fge::validate(sweep_spec);
      } catch (const fge::SweepSpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      write_rows(sweep_out, fge::run_sweep(sweep_spec));
    } else if (figure1->parsed()) {
      write_rows(figure1_out, fge::run_sweep(fge::figure1_spec()));
    } else if (dwarf->parsed()) {
      const auto& c = fge::constants();
      if (m_sol->count() > 0) dwarf_in.mass = m_solar * c.solar_mass;
      if (r_sol->count() > 0) dwarf_in.radius = r_solar * c.solar_radius;
      if (m_sol->count() + m_kg->count() == 0 || r_sol->count() + r_m->count() == 0) {
        std::cerr << "error: dwarf needs a mass (--M or --M-solar) and a radius (--R or --R-solar)\n";
        return kExitUsage;
      }
      const double z = dwarf_zeta > 0.0 ? dwarf_zeta : fge::zero_temperature_zeta();
      const auto rep = fge::dwarf_report(dwarf_in, z, kRegimes.at(dwarf_regime));
      print(json{{"mass", rep.mass},
                 {"radius", rep.radius},
                 {"mass_density", rep.mass_density},
                 {"electron_density", rep.electron_density},
                 {"k_F", rep.fermi_momentum},
                 {"T_F", rep.fermi_temperature},
                 {"t_over_tF", rep.t_over_tF},
                 {"zeta", rep.zeta},
                 {"r_e", rep.entanglement_distance},
                 {"relativity_parameter", rep.relativity_parameter},
                 {"relativistic_warning", rep.relativistic_warning},
                 {"validity", to_json(rep.validity)}});
      if (rep.relativistic_warning) {
        std::cerr << "warning: eps_F/(m c^2) = " << rep.relativity_parameter
                  << " exceeds " << fge::kRelativityWarningThreshold
                  << "; the non-relativistic dispersion is questionable\n";
      }
    } else if (avg->parsed()) {
      const auto result = fge::average_entanglement(avg_t, avg_gas.gas_regime(), kMeasures.at(avg_measure),
                                                    avg_gas.mode(), avg_gas.tol);
      print(json{{"value", result.value},
                 {"zeta", result.zeta},
                 {"t", avg_t},
                 {"measure", avg_measure},
                 {"regime", avg_gas.regime},
                 {"mu_mode", avg_gas.mu_mode}});
    }
  } catch (const fge::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const fge::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
