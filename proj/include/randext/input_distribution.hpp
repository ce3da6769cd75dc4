#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "randext/error.hpp"
#include "randext/numeric/optimize.hpp"

namespace randext {

enum class InputFamily { Uniform, Beta22, Arcsine, ToppLeone };

/// A continuous law on [0,1] playing the role of the i.i.d. inputs X_i.
class InputDistribution {
 public:
  static InputDistribution uniform() { return InputDistribution(InputFamily::Uniform, 1.0); }
  static InputDistribution beta22() { return InputDistribution(InputFamily::Beta22, 1.0); }
  /// Beta(1/2, 1/2).
  static InputDistribution arcsine() { return InputDistribution(InputFamily::Arcsine, 1.0); }
  /// Topp-Leone with cdf x^a (2-x)^a, a > 0.
  static InputDistribution topp_leone(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ParameterError("Topp-Leone shape a must be a finite value > 0");
    return InputDistribution(InputFamily::ToppLeone, a);
  }

  [[nodiscard]] InputFamily family() const noexcept { return family_; }
  /// Topp-Leone shape; 1 for the other families.
  [[nodiscard]] double shape() const noexcept { return shape_; }

  /// Density. The arcsine density is returned unclamped, so it is +inf at 0 and 1.
  [[nodiscard]] double pdf(double x) const {
    check_unit(x, "input pdf");
    switch (family_) {
      case InputFamily::Uniform:
        return 1.0;
      case InputFamily::Beta22:
        return 6.0 * x * (1.0 - x);
      case InputFamily::Arcsine:
        return 1.0 / (std::numbers::pi * std::sqrt(x * (1.0 - x)));
      case InputFamily::ToppLeone:
        return 2.0 * shape_ * (1.0 - x) * std::pow(x, shape_ - 1.0) * std::pow(2.0 - x, shape_ - 1.0);
    }
    return 0.0;
  }

  [[nodiscard]] double cdf(double x) const {
    check_unit(x, "input cdf");
    switch (family_) {
      case InputFamily::Uniform:
        return x;
      case InputFamily::Beta22:
        return x * x * (3.0 - 2.0 * x);
      case InputFamily::Arcsine:
        return 2.0 / std::numbers::pi * std::asin(std::sqrt(x));
      case InputFamily::ToppLeone:
        return std::pow(x * (2.0 - x), shape_);
    }
    return 0.0;
  }

  /// 1 - cdf(x), computed without cancellation near x = 1.
  [[nodiscard]] double survival(double x) const {
    check_unit(x, "input survival");
    switch (family_) {
      case InputFamily::Uniform:
        return 1.0 - x;
      case InputFamily::Beta22:
        return (1.0 - x) * (1.0 - x) * (1.0 + 2.0 * x);
      case InputFamily::Arcsine:
        return 2.0 / std::numbers::pi * std::asin(std::sqrt(1.0 - x));
      case InputFamily::ToppLeone: {
        // x(2-x) = 1 - (1-x)^2
        const double c = 1.0 - x;
        return -std::expm1(shape_ * std::log1p(-c * c));
      }
    }
    return 0.0;
  }

  /// Inverse cdf. Closed form for Uniform and Arcsine, bisection otherwise.
  [[nodiscard]] double quantile(double u) const {
    check_unit(u, "input quantile");
    switch (family_) {
      case InputFamily::Uniform:
        return u;
      case InputFamily::Arcsine: {
        const double s = std::sin(std::numbers::pi * u / 2.0);
        return s * s;
      }
      case InputFamily::Beta22:
      case InputFamily::ToppLeone:
        if (u == 0.0) return 0.0;
        if (u == 1.0) return 1.0;
        return numeric::bisect_root([&](double x) { return cdf(x) - u; }, 0.0, 1.0, 1e-16);
    }
    return 0.0;
  }

  /// quantile(1 - v) for v given directly; keeps resolution when 1 - v is tiny.
  [[nodiscard]] double upper_quantile(double v) const {
    check_unit(v, "input upper quantile");
    switch (family_) {
      case InputFamily::Uniform:
        return 1.0 - v;
      case InputFamily::Arcsine: {
        const double c = std::cos(std::numbers::pi * v / 2.0);
        return c * c;
      }
      case InputFamily::Beta22:
      case InputFamily::ToppLeone:
        if (v == 0.0) return 1.0;
        if (v == 1.0) return 0.0;
        return numeric::bisect_root([&](double x) { return v - survival(x); }, 0.0, 1.0, 1e-16);
    }
    return 0.0;
  }

  [[nodiscard]] std::string name() const {
    switch (family_) {
      case InputFamily::Uniform:
        return "uniform";
      case InputFamily::Beta22:
        return "beta22";
      case InputFamily::Arcsine:
        return "arcsine";
      case InputFamily::ToppLeone:
        return "topp-leone";
    }
    return "?";
  }

 private:
  InputDistribution(InputFamily family, double shape) : family_(family), shape_(shape) {}

  static void check_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(what) + ": argument outside [0,1]");
  }

  InputFamily family_;
  double shape_;
};

}  // namespace randext
