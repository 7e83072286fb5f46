#pragma once

#include <stdexcept>
#include <string>

namespace gupent {

/// Input lies outside the mathematical domain of an operation
/// (negative energy, nonzero constant term where zero is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller passed an unsupported option (order, term count, degree, q = 1).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative or quadrature routine could not reach the requested accuracy.
/// `estimate` carries the best value reached, `error_estimate` its error bound.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double estimate = 0.0,
                 double error_estimate = 0.0)
      : std::runtime_error(what),
        estimate_(estimate),
        error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

}  // namespace gupent
