#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fge/constants.hpp"
#include "fge/errors.hpp"
#include "fge/fermi_gas.hpp"
#include "oracles.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using fge::GasRegime;
using fge::MuMode;

namespace {
constexpr double kThreePiSq = 3.0 * fge::kPi * fge::kPi;
constexpr double kZeta0 = 1.8148229770012292;  // mpmath root of f(x,0)^2 = 1/2
constexpr GasRegime kRegimes[] = {GasRegime::NonRelativistic, GasRegime::ExtremeRelativistic};
}  // namespace

TEST_CASE("fermi momentum from density", "[fermi]") {
  CHECK_THAT(fge::fermi_momentum_from_density(1.0 / kThreePiSq), WithinRel(1.0, 1e-15));
  // mpmath: (3 pi^2 * 8.22e35)^(1/3)
  CHECK_THAT(fge::fermi_momentum_from_density(8.22e35), WithinRel(2.8979948268287519e12, 1e-13));
  CHECK_THAT(fge::density_from_fermi_momentum(1.0), WithinRel(0.033773727880779257, 1e-14));
  CHECK_THAT(fge::density_from_fermi_momentum(2.8990108234512833e12), WithinRel(8.2286484838608594e35, 1e-13));
  CHECK_THROWS_WITH(fge::fermi_momentum_from_density(0.0), ContainsSubstring("density"));
  CHECK_THROWS_AS(fge::fermi_momentum_from_density(-3.0), fge::DomainError);
  CHECK_THROWS_AS(fge::density_from_fermi_momentum(0.0), fge::DomainError);
}

TEST_CASE("degeneracy pressure", "[fermi]") {
  // Direct evaluation of (3 pi^2)^{2/3} hbar^2 n^{5/3} / 5m in mpmath.
  CHECK_THAT(fge::pressure_from_density(8.22e35, GasRegime::NonRelativistic),
             WithinRel(1.6856226214094183e22, 1e-12));
  const double n = 4.7e30;
  const double lambda = 1.7;
  const double l3 = lambda * lambda * lambda;
  CHECK_THAT(fge::pressure_from_density(l3 * n, GasRegime::NonRelativistic),
             WithinRel(std::pow(lambda, 5) * fge::pressure_from_density(n, GasRegime::NonRelativistic), 1e-12));
  CHECK_THAT(fge::pressure_from_density(l3 * n, GasRegime::ExtremeRelativistic),
             WithinRel(std::pow(lambda, 4) * fge::pressure_from_density(n, GasRegime::ExtremeRelativistic), 1e-12));
  CHECK_THROWS_WITH(fge::pressure_from_density(0.0, GasRegime::NonRelativistic), ContainsSubstring("density"));
}

TEST_CASE("fermi momentum from pressure", "[fermi]") {
  const auto& c = fge::constants();
  const double unit_p = c.hbar * c.hbar / (15.0 * fge::kPi * fge::kPi * c.electron_mass);
  CHECK_THAT(fge::fermi_momentum_from_pressure(unit_p, GasRegime::NonRelativistic), WithinRel(1.0, 1e-14));
  CHECK_THAT(fge::fermi_momentum_from_pressure(1.62e11, GasRegime::NonRelativistic),
             WithinRel(1.8140470151523346e10, 1e-12));
  CHECK_THAT(fge::fermi_momentum_from_pressure(1.62e11, GasRegime::NonRelativistic), WithinRel(kZeta0 / 1e-10, 1e-3));
  for (GasRegime regime : kRegimes) {
    const double k = 3.3e11;
    const double p = fge::pressure_from_density(fge::density_from_fermi_momentum(k), regime);
    CHECK_THAT(fge::fermi_momentum_from_pressure(p, regime), WithinRel(k, 1e-12));
  }
  CHECK_THROWS_WITH(fge::fermi_momentum_from_pressure(-5.0, GasRegime::ExtremeRelativistic),
                    ContainsSubstring("pressure"));
}

TEST_CASE("entanglement distance and its pressure", "[fermi]") {
  CHECK_THAT(fge::entanglement_distance(2.90e12, 1.8), WithinRel(6.2e-13, 1e-2));
  const double r = 3.1e-11;
  CHECK(fge::entanglement_distance(kZeta0 / r, kZeta0) == Catch::Approx(r).epsilon(1e-15));
  const double n = 1e29;
  CHECK_THAT(fge::entanglement_distance(fge::fermi_momentum_from_density(2.0 * n), 1.8) /
                 fge::entanglement_distance(fge::fermi_momentum_from_density(n), 1.8),
             WithinRel(std::pow(2.0, -1.0 / 3.0), 1e-14));

  // mpmath: zeta0^5 hbar^2 / (15 pi^2 m) / (1e-10)^5
  CHECK_THAT(fge::pressure_from_entanglement_distance(1e-10, GasRegime::NonRelativistic, kZeta0),
             WithinRel(1.6234677548668378e11, 1e-12));
  for (GasRegime regime : kRegimes) {
    const double p1 = fge::pressure_from_entanglement_distance(2e-11, regime, kZeta0);
    const double p2 = fge::pressure_from_entanglement_distance(1e-11, regime, kZeta0);
    CHECK_THAT(p2 / p1, WithinRel(regime == GasRegime::NonRelativistic ? 32.0 : 16.0, 1e-13));
  }
  CHECK_THROWS_AS(fge::entanglement_distance(1.0, 0.0), fge::DomainError);
  CHECK_THROWS_AS(fge::pressure_from_entanglement_distance(0.0, GasRegime::NonRelativistic, 1.8),
                  fge::DomainError);
}

TEST_CASE("round trips over twenty decades of density", "[fermi][property]") {
  for (GasRegime regime : kRegimes) {
    for (int i = 0; i <= 40; ++i) {
      const double n = std::pow(10.0, 20.0 + 0.5 * i);
      const double k = fge::fermi_momentum_from_density(n);
      CHECK_THAT(fge::density_from_fermi_momentum(k), WithinRel(n, 1e-12));
      const double p = fge::pressure_from_density(n, regime);
      CHECK_THAT(fge::fermi_momentum_from_pressure(p, regime), WithinRel(k, 1e-12));
      const double r_e = fge::entanglement_distance(k, kZeta0);
      CHECK_THAT(fge::pressure_from_entanglement_distance(r_e, regime, kZeta0), WithinRel(p, 1e-10));
    }
  }
}

TEST_CASE("dispersion relations", "[fermi]") {
  CHECK(fge::dispersion(0.0, GasRegime::NonRelativistic) == 0.0);
  CHECK(fge::dispersion(0.0, GasRegime::ExtremeRelativistic) == 0.0);
  const double k = 7.3e9;
  CHECK_THAT(fge::dispersion(2 * k, GasRegime::NonRelativistic) / fge::dispersion(k, GasRegime::NonRelativistic),
             WithinRel(4.0, 1e-15));
  CHECK_THAT(fge::dispersion(2 * k, GasRegime::ExtremeRelativistic) /
                 fge::dispersion(k, GasRegime::ExtremeRelativistic),
             WithinRel(2.0, 1e-15));
  const fge::FermiGasState gas(1e33, 0.0, GasRegime::NonRelativistic);
  CHECK(fge::dispersion(gas.fermi_momentum(), GasRegime::NonRelativistic) == gas.fermi_energy());
  CHECK_THROWS_AS(fge::dispersion(-1.0, GasRegime::NonRelativistic), fge::DomainError);
}

TEST_CASE("occupation", "[fermi]") {
  const double n = 1e33;
  const fge::FermiGasState gas(n, 0.0, GasRegime::NonRelativistic);
  const double k_f = gas.fermi_momentum();
  const double mu = gas.fermi_energy();
  CHECK(fge::occupation(0.5 * k_f, mu, 0.0, GasRegime::NonRelativistic) == 1.0);
  CHECK(fge::occupation(1.5 * k_f, mu, 0.0, GasRegime::NonRelativistic) == 0.0);
  CHECK(fge::occupation(k_f, fge::dispersion(k_f, GasRegime::NonRelativistic), 0.0, GasRegime::NonRelativistic) == 0.5);
  CHECK(fge::occupation(k_f, fge::dispersion(k_f, GasRegime::NonRelativistic), 1234.0, GasRegime::NonRelativistic) == 0.5);
  CHECK_THAT(fge::fermi_dirac(std::log(3.0)), WithinRel(0.25, 1e-15));
  CHECK_THROWS_AS(fge::occupation(k_f, mu, -1.0, GasRegime::NonRelativistic), fge::DomainError);

  for (double z : {-1e6, -800.0, 800.0, 1e6}) {
    const double v = fge::fermi_dirac(z);
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  CHECK(fge::fermi_dirac(1e6) == 0.0);
  CHECK(fge::fermi_dirac(-1e6) == 1.0);

  // Non-increasing in k at fixed (mu, T).
  for (GasRegime regime : kRegimes) {
    double previous = 1.0;
    for (int i = 0; i <= 400; ++i) {
      const double occ = fge::occupation(k_f * i / 200.0, mu, 0.05 * gas.fermi_temperature(), regime);
      CHECK(occ <= previous);
      previous = occ;
    }
  }
}

TEST_CASE("chemical potential", "[fermi][mu]") {
  for (GasRegime regime : kRegimes) {
    for (MuMode mode : {MuMode::FermiEnergyApprox, MuMode::ExactNormalization}) {
      CHECK(fge::reduced_chemical_potential(0.0, regime, mode) == 1.0);
      const fge::FermiGasState gas(1e30, 0.0, regime, mode);
      CHECK(gas.chemical_potential() == gas.fermi_energy());
    }
  }
  // Sommerfeld: 1 - pi^2 t^2 / 12 at t = 0.01.
  const double t = 0.01;
  const double sommerfeld = 1.0 - fge::kPi * fge::kPi * t * t / 12.0;
  const double mu = fge::reduced_chemical_potential(t, GasRegime::NonRelativistic, MuMode::ExactNormalization);
  CHECK_THAT(mu, WithinAbs(sommerfeld, 1e-6));
  // mpmath root of the normalization integral.
  CHECK_THAT(mu, WithinAbs(0.99991774111133985, 1e-10));
  CHECK_THAT(fge::reduced_chemical_potential(0.05, GasRegime::NonRelativistic, MuMode::ExactNormalization),
             WithinAbs(0.99793607026603865, 1e-10));
  CHECK_THAT(fge::reduced_chemical_potential(0.3, GasRegime::NonRelativistic, MuMode::ExactNormalization),
             WithinAbs(0.91458230152281467, 1e-10));
  CHECK_THAT(fge::reduced_chemical_potential(0.05, GasRegime::ExtremeRelativistic, MuMode::ExactNormalization),
             WithinAbs(0.99177551664346093, 1e-10));
  CHECK_THAT(fge::reduced_chemical_potential(0.3, GasRegime::ExtremeRelativistic, MuMode::ExactNormalization),
             WithinAbs(0.70846665574613078, 1e-10));

  for (GasRegime regime : kRegimes) {
    for (double tt : {1e-3, 0.05, 0.5, 2.0}) {
      const double m = fge::reduced_chemical_potential(tt, regime, MuMode::ExactNormalization);
      CHECK_THAT(fge::normalization_integral(m, tt, regime), WithinRel(1.0 / 3.0, 1e-9));
    }
  }

  CHECK(std::abs(fge::reduced_chemical_potential(1e-4, GasRegime::NonRelativistic, MuMode::ExactNormalization) -
                 1.0) < 1e-6);
  CHECK(fge::reduced_chemical_potential(0.3, GasRegime::NonRelativistic, MuMode::FermiEnergyApprox) == 1.0);

  // Deeply degenerate, as inside a white dwarf: the edge is far narrower than
  // any panel and u^2 - mu~ must not lose digits there.
  for (GasRegime regime : kRegimes) {
    for (double tt : {1e-6, 7.3e-6}) {
      const double m = fge::reduced_chemical_potential(tt, regime, MuMode::ExactNormalization);
      const double k = regime == GasRegime::NonRelativistic ? fge::kPi * fge::kPi / 12.0 : fge::kPi * fge::kPi / 3.0;
      CHECK_THAT(m, WithinAbs(1.0 - k * tt * tt, 2e-11));
    }
  }

  const fge::FermiGasState gas(1e33, 300.0, GasRegime::NonRelativistic);
  CHECK_THAT(fge::chemical_potential(1e33, 300.0, GasRegime::NonRelativistic, MuMode::ExactNormalization),
             WithinRel(gas.chemical_potential(), 1e-15));
}

TEST_CASE("chemical potential bracket failure is reported", "[fermi][mu]") {
  try {
    fge::reduced_chemical_potential(1e8, GasRegime::ExtremeRelativistic, MuMode::ExactNormalization);
    FAIL("expected SolverError");
  } catch (const fge::SolverError& e) {
    CHECK(e.kind() == fge::SolverError::Kind::NoSignChange);
    CHECK(e.bracket_hi() == 2.0);
    CHECK_THAT(std::string(e.what()), ContainsSubstring("bracket"));
  }
}

TEST_CASE("fermi gas state invariants", "[fermi]") {
  const auto& c = fge::constants();
  for (GasRegime regime : kRegimes) {
    const fge::FermiGasState gas(3.3e34, 1e5, regime);
    CHECK_THAT(gas.fermi_momentum(), WithinRel(std::cbrt(kThreePiSq * 3.3e34), 1e-12));
    const double k = gas.fermi_momentum();
    const double eps = regime == GasRegime::NonRelativistic ? c.hbar * c.hbar * k * k / (2 * c.electron_mass)
                                                            : c.hbar * c.light_speed * k;
    CHECK_THAT(gas.fermi_energy(), WithinRel(eps, 1e-14));
    CHECK_THAT(gas.fermi_temperature(), WithinRel(eps / c.boltzmann, 1e-14));
    CHECK(gas.pressure() == fge::pressure_from_density(3.3e34, regime));
    CHECK(gas.degeneracy_ok() == (gas.reduced_temperature() <= 0.01));
  }
  CHECK_THROWS_AS(fge::FermiGasState(0.0, 1.0, GasRegime::NonRelativistic), fge::DomainError);
  CHECK_THROWS_AS(fge::FermiGasState(1.0, -1.0, GasRegime::NonRelativistic), fge::DomainError);
}

TEST_CASE("validity report", "[fermi]") {
  // Sirius B electron density and temperature.
  const fge::FermiGasState sirius(8.2286484838608594e35, 27000.0, GasRegime::NonRelativistic,
                                  MuMode::FermiEnergyApprox);
  const auto v = fge::validity(sirius, 6.0);
  CHECK_THAT(v.t_over_tF, WithinRel(7.2663120218775471e-6, 1e-6));
  CHECK(v.degenerate);
  CHECK(v.ideal);
  CHECK_THAT(v.density_ratio, WithinRel(3387.1108, 1e-6));

  const fge::FermiGasState probe(1e30, 1.0, GasRegime::NonRelativistic, MuMode::FermiEnergyApprox);
  const fge::FermiGasState hot(1e30, probe.fermi_temperature(), GasRegime::NonRelativistic,
                               MuMode::FermiEnergyApprox);
  CHECK_FALSE(fge::validity(hot, 1.0).degenerate);

  const double threshold = fge::ideality_threshold_density(2.0);
  // (q^2 m / (4 pi eps0 hbar^2))^3 = a0^-3 with a0 = 5.29177210903e-11 m
  CHECK_THAT(threshold, WithinRel(4.0 / std::pow(5.29177210903e-11, 3), 1e-8));
  const fge::FermiGasState boundary(fge::kIdealityFactor * threshold, 0.0, GasRegime::NonRelativistic);
  CHECK(fge::validity(boundary, 2.0).ideal);
  const fge::FermiGasState below(0.99 * fge::kIdealityFactor * threshold, 0.0, GasRegime::NonRelativistic);
  CHECK_FALSE(fge::validity(below, 2.0).ideal);
  CHECK_THROWS_AS(fge::validity(boundary, 0.5), fge::DomainError);
}
