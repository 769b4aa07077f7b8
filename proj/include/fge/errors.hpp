#pragma once

#include <stdexcept>
#include <string>

namespace fge {

/// Raised when an input lies outside an operation's domain. The message
/// names the offending quantity and its value.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Base for failures of an iterative numerical method.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root bracketing or refinement failed.
class SolverError : public NumericalError {
 public:
  enum class Kind { NoRoot, BracketTooSmall, NoSignChange };

  SolverError(Kind kind, double lo, double hi, const std::string& what)
      : NumericalError(what), kind_(kind), lo_(lo), hi_(hi) {}

  Kind kind() const noexcept { return kind_; }
  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  Kind kind_;
  double lo_;
  double hi_;
};

/// Adaptive quadrature exhausted its panel budget.
class QuadratureError : public NumericalError {
 public:
  QuadratureError(double achieved, const std::string& what)
      : NumericalError(what), achieved_(achieved) {}

  double achieved_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

namespace detail {
[[noreturn]] void throw_domain(const std::string& quantity, double value,
                               const std::string& requirement);
}  // namespace detail

}  // namespace fge
