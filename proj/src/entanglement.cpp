#include "fge/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "fge/errors.hpp"
#include "fge/quadrature.hpp"

namespace fge {

namespace {

using Complex = std::complex<double>;

constexpr double kStateTol = 1e-12;
// Quadrature noise allowed on |f| before it is treated as out of domain.
constexpr double kAmplitudeSlack = 1e-9;

void check_amplitude(double f) {
  if (!(std::abs(f) <= 1.0)) detail::throw_domain("exchange amplitude f", f, "|f| must not exceed 1");
}

double clamp_amplitude(double f) {
  if (std::abs(f) > 1.0 && std::abs(f) <= 1.0 + kAmplitudeSlack) return std::copysign(1.0, f);
  return f;
}

// sigma_y (x) sigma_y in the (uu, ud, du, dd) basis.
Matrix4c spin_flip() {
  Matrix4c y = Matrix4c::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

Matrix4c hermitian_sqrt(const Matrix4c& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho);
  const Eigen::Vector4d root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * root.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

TwoSpinState TwoSpinState::from_matrix(const Matrix4c& rho, double f_source) {
  if (!rho.allFinite()) throw DomainError("density matrix has non-finite entries");
  const double hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (hermiticity > kStateTol) {
    detail::throw_domain("density matrix hermiticity defect", hermiticity, "must be below 1e-12");
  }
  const Complex trace = rho.trace();
  if (std::abs(trace - 1.0) > kStateTol) {
    detail::throw_domain("density matrix trace", trace.real(), "must equal 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues()(0);
  if (min_eig < -kStateTol) {
    detail::throw_domain("density matrix minimum eigenvalue", min_eig, "must be non-negative");
  }
  return TwoSpinState(rho, f_source);
}

TwoSpinState werner_state_from_f(double f) {
  check_amplitude(f);
  const double f2 = f * f;
  const double norm = 4.0 - 2.0 * f2;
  Matrix4c rho = Matrix4c::Identity() / norm;
  // SWAP exchanges the middle basis states and fixes uu and dd.
  rho(0, 0) -= f2 / norm;
  rho(3, 3) -= f2 / norm;
  rho(1, 2) -= f2 / norm;
  rho(2, 1) -= f2 / norm;
  return TwoSpinState::from_matrix(rho, f);
}

bool is_entangled(double f) {
  check_amplitude(f);
  return f * f > 0.5;
}

double concurrence_closed_form(double f) {
  check_amplitude(f);
  const double f2 = f * f;
  return std::max((2.0 * f2 - 1.0) / (2.0 - f2), 0.0);
}

double binary_entropy(double y) {
  if (!(y >= 0.0 && y <= 1.0)) detail::throw_domain("probability", y, "must lie in [0, 1]");
  if (y == 0.0 || y == 1.0) return 0.0;
  return -y * std::log2(y) - (1.0 - y) * std::log2(1.0 - y);
}

double entropy_of_formation_from_concurrence(double concurrence) {
  if (!(concurrence >= 0.0 && concurrence <= 1.0)) {
    detail::throw_domain("concurrence", concurrence, "must lie in [0, 1]");
  }
  return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - concurrence * concurrence));
}

double entropy_of_formation(double f) {
  return entropy_of_formation_from_concurrence(concurrence_closed_form(f));
}

double wootters_concurrence(const TwoSpinState& state) {
  // The Wootters lambdas are the singular values of sqrt(rho~) sqrt(rho),
  // where rho~ = Y rho* Y. Taking singular values avoids square roots of
  // near-zero eigenvalues of rho rho~.
  const Matrix4c y = spin_flip();
  const Matrix4c root = hermitian_sqrt(state.matrix());
  const Matrix4c flipped_root = y * root.conjugate() * y;
  Eigen::JacobiSVD<Matrix4c> svd(flipped_root * root);
  const Eigen::Vector4d s = svd.singularValues();  // descending
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double ppt_min_eigenvalue(const TwoSpinState& state) {
  const Matrix4c& rho = state.matrix();
  Matrix4c pt;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          pt(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(pt, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

EntanglementReport eos_evaluate(double r, double pressure, double temperature, GasRegime regime,
                                MuMode mode, double tol) {
  const ExchangeAmplitude amplitude = f_from_pressure(r, pressure, temperature, regime, mode, tol);
  const double k_fermi = fermi_momentum_from_pressure(pressure, regime);
  EntanglementReport report;
  report.f = clamp_amplitude(amplitude.value);
  report.entangled = is_entangled(report.f);
  report.concurrence = concurrence_closed_form(report.f);
  report.entropy_of_formation = entropy_of_formation_from_concurrence(report.concurrence);
  report.x = amplitude.coords.x;
  report.t = amplitude.coords.t;
  const double zeta = report.t == 0.0 ? zero_temperature_zeta() : solve_zeta(report.t, regime, mode).zeta;
  report.r_e = entanglement_distance(k_fermi, zeta);
  report.r = r;
  report.pressure = pressure;
  report.temperature = temperature;
  report.regime = regime;
  return report;
}

AverageEntanglement average_entanglement(double t, GasRegime regime, Measure measure, MuMode mode,
                                         double tol) {
  const ZetaResult root = solve_zeta(t, regime, mode);
  const ReducedCoordinates base = make_coordinates(0.0, t, regime, mode);
  auto integrand = [&](double x) {
    ReducedCoordinates c = base;
    c.x = x;
    const double f = clamp_amplitude(exchange_amplitude(c, tol).value);
    const double concurrence = concurrence_closed_form(f);
    return measure == Measure::Concurrence ? concurrence
                                           : entropy_of_formation_from_concurrence(concurrence);
  };
  const std::array<double, 2> limits{0.0, root.zeta};
  const double rough = quad::apply_rule(quad::gauss_legendre(64), integrand, 0.0, root.zeta);
  quad::PanelOptions options;
  options.fine_order = 64;
  options.coarse_order = 32;
  options.panel_budget = 4096;
  const auto result = quad::integrate_panels(integrand, limits, 1e-8 * std::abs(rough), options);
  return AverageEntanglement{result.value / root.zeta, root.zeta};
}

}  // namespace fge
