#pragma once

#include <cstddef>

#include "randext/error.hpp"

namespace randext::numeric {

/// Stopping rule shared by quadrature, series summation and the 1-D optimizer.
struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_evals = 1'000'000;

  /// Adaptive quadrature default: 1e-10 absolute and relative, 10^6 integrand calls.
  static constexpr Tolerance quadrature() { return {1e-10, 1e-10, 1'000'000}; }
  /// Series default: stop once the tail bound drops below 1e-12.
  static constexpr Tolerance series() { return {1e-12, 0.0, 1'000'000}; }
  /// Golden-section refinement default.
  static constexpr Tolerance optimizer() { return {1e-10, 0.0, 10'000}; }

  void validate() const {
    if (!(abs_tol > 0.0)) throw ParameterError("Tolerance: abs_tol must be > 0");
    if (!(rel_tol >= 0.0)) throw ParameterError("Tolerance: rel_tol must be >= 0");
    if (max_evals < 1) throw ParameterError("Tolerance: max_evals must be >= 1");
  }
};

}  // namespace randext::numeric
