#pragma once

#include <complex>

#include <Eigen/Core>

#include "fge/exchange.hpp"
#include "fge/fermi_gas.hpp"

namespace fge {

using Matrix4c = Eigen::Matrix<std::complex<double>, 4, 4>;

/// Two-spin density matrix in the basis (up-up, up-down, down-up, down-down).
/// Always Hermitian, unit trace and positive semidefinite to 1e-12.
class TwoSpinState {
 public:
  /// Validates rho; throws DomainError if it is not a density matrix.
  static TwoSpinState from_matrix(const Matrix4c& rho, double f_source = 0.0);

  const Matrix4c& matrix() const noexcept { return matrix_; }
  double f_source() const noexcept { return f_source_; }

 private:
  TwoSpinState(const Matrix4c& rho, double f_source) : matrix_(rho), f_source_(f_source) {}

  Matrix4c matrix_;
  double f_source_;
};

/// (I - f^2 SWAP) / (4 - 2 f^2): the unit-trace exchange state of two
/// electrons whose spatial overlap amplitude is f.
TwoSpinState werner_state_from_f(double f);

/// Peres-Horodecki condition for the exchange state: f^2 > 1/2.
bool is_entangled(double f);

/// max{(2f^2 - 1)/(2 - f^2), 0}.
double concurrence_closed_form(double f);

/// h(y) in bits with h(0) = h(1) = 0.
double binary_entropy(double y);

double entropy_of_formation_from_concurrence(double concurrence);

/// h(1/2 + sqrt(1 - C(f)^2)/2).
double entropy_of_formation(double f);

/// Wootters spin-flip concurrence of an arbitrary two-qubit state.
double wootters_concurrence(const TwoSpinState& state);

/// Smallest eigenvalue of the partial transpose over the second spin.
double ppt_min_eigenvalue(const TwoSpinState& state);

struct EntanglementReport {
  double f = 0.0;
  bool entangled = false;
  double concurrence = 0.0;
  double entropy_of_formation = 0.0;
  double x = 0.0;    // k_F r
  double t = 0.0;    // T / T_F
  double r_e = 0.0;  // zeta(t) / k_F, metres
  double r = 0.0;
  double pressure = 0.0;
  double temperature = 0.0;
  GasRegime regime = GasRegime::NonRelativistic;
};

/// Entanglement of two electrons a distance r apart in a gas at degeneracy
/// pressure P and temperature T.
EntanglementReport eos_evaluate(double r, double pressure, double temperature, GasRegime regime,
                                MuMode mode = MuMode::ExactNormalization,
                                double tol = kDefaultQuadTol);

enum class Measure { Concurrence, EntropyOfFormation };

struct AverageEntanglement {
  double value = 0.0;
  double zeta = 0.0;  // upper limit x(T) of the average
};

/// (1/zeta) * int_0^zeta E(x, t) dx, with zeta from solve_zeta.
AverageEntanglement average_entanglement(double t, GasRegime regime, Measure measure,
                                         MuMode mode = MuMode::ExactNormalization,
                                         double tol = kDefaultQuadTol);

}  // namespace fge
