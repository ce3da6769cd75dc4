#pragma once

#include <stdexcept>
#include <string>

namespace randext {

/// Argument outside the mathematical domain of an operation (x outside [0,1], n < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid distribution or model parameter (theta outside (0,1), lambda <= 0, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine ran out of its evaluation budget before reaching tolerance.
/// Carries the best estimate and the error bound reached at that point.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

  [[nodiscard]] double estimate() const noexcept { return estimate_; }
  [[nodiscard]] double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

/// A function under evaluation returned NaN or an infinity where a finite value was required.
class NonFiniteValue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sample cannot support the requested estimate (estimate lands outside (0,1), bad values).
class DegenerateSample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace randext
