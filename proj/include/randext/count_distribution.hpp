#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "randext/error.hpp"
#include "randext/numeric/random_source.hpp"
#include "randext/numeric/series.hpp"
#include "randext/zeta.hpp"

namespace randext {

enum class CountFamily { Geometric, ShiftedGeometric, TruncPoisson, Zipf };

/// Law of the random sample size N on the positive integers.
///
///   Geometric(theta)        p(n) = theta (1-theta)^(n-1),             n >= 1
///   ShiftedGeometric(theta) p(n) = theta (1-theta)^(n-2),             n >= 2
///   TruncPoisson(lambda)    p(n) = e^-l l^n / ((1 - e^-l) n!),        n >= 1
///   Zipf(k)                 p(n) = n^-k / zeta(k),                    n >= 1
class CountDistribution {
 public:
  static CountDistribution geometric(double theta) {
    check_theta(theta);
    return CountDistribution(CountFamily::Geometric, theta);
  }
  static CountDistribution shifted_geometric(double theta) {
    check_theta(theta);
    return CountDistribution(CountFamily::ShiftedGeometric, theta);
  }
  static CountDistribution truncated_poisson(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ParameterError("Poisson rate lambda must be a finite value > 0");
    return CountDistribution(CountFamily::TruncPoisson, lambda);
  }
  static CountDistribution zipf(double k = 2.0) {
    if (!(k > 1.0) || !std::isfinite(k)) throw ParameterError("Zipf exponent k must be a finite value > 1");
    return CountDistribution(CountFamily::Zipf, k);
  }

  [[nodiscard]] CountFamily family() const noexcept { return family_; }
  /// theta, lambda or k depending on the family.
  [[nodiscard]] double parameter() const noexcept { return param_; }
  [[nodiscard]] double zeta_k() const noexcept { return zeta_k_; }
  [[nodiscard]] std::uint64_t support_min() const noexcept {
    return family_ == CountFamily::ShiftedGeometric ? 2 : 1;
  }

  [[nodiscard]] double pmf(long long n) const {
    if (n < 1) throw DomainError("count pmf: n must be >= 1");
    const double x = static_cast<double>(n);
    switch (family_) {
      case CountFamily::Geometric:
        return param_ * std::pow(1.0 - param_, x - 1.0);
      case CountFamily::ShiftedGeometric:
        return n < 2 ? 0.0 : param_ * std::pow(1.0 - param_, x - 2.0);
      case CountFamily::TruncPoisson:
        return std::exp(x * std::log(param_) - param_ - std::lgamma(x + 1.0)) / -std::expm1(-param_);
      case CountFamily::Zipf:
        return std::pow(x, -param_) / zeta_k_;
    }
    return 0.0;
  }

  /// E[s^N].
  [[nodiscard]] double pgf(double s) const {
    check_s(s);
    const double q = 1.0 - param_;
    switch (family_) {
      case CountFamily::Geometric:
        return param_ * s / (1.0 - q * s);
      case CountFamily::ShiftedGeometric:
        return param_ * s * s / (1.0 - q * s);
      case CountFamily::TruncPoisson:
        return std::expm1(param_ * s) * std::exp(-param_) / -std::expm1(-param_);
      case CountFamily::Zipf:
        return zipf_pgf(s);
    }
    return 0.0;
  }

  /// d/ds E[s^N] = sum_n n p(n) s^(n-1). Zipf goes through the guarded series.
  [[nodiscard]] double pgf_derivative(double s) const {
    check_s(s);
    const double q = 1.0 - param_;
    switch (family_) {
      case CountFamily::Geometric: {
        const double d = 1.0 - q * s;
        return param_ / (d * d);
      }
      case CountFamily::ShiftedGeometric: {
        const double d = 1.0 - q * s;
        return param_ * s * (2.0 - q * s) / (d * d);
      }
      case CountFamily::TruncPoisson:
        return param_ * std::exp(-param_ * (1.0 - s)) / -std::expm1(-param_);
      case CountFamily::Zipf:
        return zipf_pgf_derivative(s);
    }
    return 0.0;
  }

  /// sum_n n p(n) s^(n-1) by guarded series with a family-specific tail bound,
  /// whatever the family. Throws BudgetExceeded near s = 1 for slow tails.
  [[nodiscard]] double pgf_derivative_series(double s, const numeric::Tolerance& tol = numeric::Tolerance::series()) const {
    check_s(s);
    if (s == 1.0) {
      const double m = mean();
      if (std::isinf(m)) throw BudgetExceeded("pgf derivative diverges at s = 1", m, m);
      return m;
    }
    auto term = [&](std::uint64_t n) { return derivative_term(n, s); };
    auto tail = [&](std::uint64_t n) { return derivative_tail(n, s); };
    return numeric::sum_series(term, tail, tol);
  }

  /// E[N]; +inf for Zipf with k <= 2.
  [[nodiscard]] double mean() const {
    switch (family_) {
      case CountFamily::Geometric:
        return 1.0 / param_;
      case CountFamily::ShiftedGeometric:
        return 1.0 + 1.0 / param_;
      case CountFamily::TruncPoisson:
        return param_ / -std::expm1(-param_);
      case CountFamily::Zipf:
        return param_ > 2.0 ? riemann_zeta(param_ - 1.0) / zeta_k_ : std::numeric_limits<double>::infinity();
    }
    return 0.0;
  }

  /// Exact draw: geometric families by inversion, truncated Poisson by
  /// sequential inversion, Zipf by Devroye's rejection method.
  std::uint64_t sample(numeric::RandomSource& src) const {
    switch (family_) {
      case CountFamily::Geometric:
        return sample_geometric(src);
      case CountFamily::ShiftedGeometric:
        return 1 + sample_geometric(src);
      case CountFamily::TruncPoisson:
        return sample_truncated_poisson(src);
      case CountFamily::Zipf:
        return sample_zipf(src);
    }
    return 1;
  }

  [[nodiscard]] std::string name() const {
    switch (family_) {
      case CountFamily::Geometric:
        return "geometric";
      case CountFamily::ShiftedGeometric:
        return "shifted-geometric";
      case CountFamily::TruncPoisson:
        return "poisson";
      case CountFamily::Zipf:
        return "zipf";
    }
    return "?";
  }

 private:
  static constexpr double kMaxCount = 0x1.0p62;
  // Terms the Zipf derivative series may spend before the k = 2 closed form takes over.
  static constexpr std::size_t kZipfSeriesBudget = 50'000;

  CountDistribution(CountFamily family, double param)
      : family_(family), param_(param), zeta_k_(family == CountFamily::Zipf ? riemann_zeta(param) : 1.0) {}

  static void check_theta(double theta) {
    if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("geometric theta must lie in (0,1)");
  }
  static void check_s(double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("pgf argument must lie in [0,1]");
  }

  [[nodiscard]] double derivative_term(std::uint64_t n, double s) const {
    const double x = static_cast<double>(n);
    return x * pmf(static_cast<long long>(n)) * std::pow(s, x - 1.0);
  }

  // Bound on sum_{m>n} m p(m) s^(m-1), s < 1.
  [[nodiscard]] double derivative_tail(std::uint64_t n, double s) const {
    const double x = static_cast<double>(n);
    switch (family_) {
      case CountFamily::Geometric: {
        const double r = (1.0 - param_) * s;
        return param_ * std::pow(r, x) * ((x + 1.0) - x * r) / ((1.0 - r) * (1.0 - r));
      }
      case CountFamily::ShiftedGeometric: {
        const double q = 1.0 - param_;
        const double r = q * s;
        return param_ / q * std::pow(r, x) * ((x + 1.0) - x * r) / ((1.0 - r) * (1.0 - r));
      }
      case CountFamily::TruncPoisson: {
        const double ratio = param_ * s / (x + 1.0);
        if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
        return derivative_term(n, s) * (param_ * s / x) / (1.0 - ratio);
      }
      case CountFamily::Zipf:
        return std::pow(x + 1.0, 1.0 - param_) * std::pow(s, x) / ((1.0 - s) * zeta_k_);
    }
    return std::numeric_limits<double>::infinity();
  }

  [[nodiscard]] double zipf_pgf(double s) const {
    if (s == 1.0) return 1.0;
    if (s == 0.0) return 0.0;
    if (param_ == 2.0 && s > 0.5) {
      // Li2(s) = pi^2/6 - ln(s) ln(1-s) - Li2(1-s); the reflected series converges fast.
      return (std::numbers::pi * std::numbers::pi / 6.0 - std::log(s) * std::log1p(-s) - zipf_polylog(1.0 - s)) /
             zeta_k_;
    }
    return zipf_polylog(s) / zeta_k_;
  }

  // sum_n s^n n^-k
  [[nodiscard]] double zipf_polylog(double s) const {
    auto term = [&](std::uint64_t n) {
      const double x = static_cast<double>(n);
      return std::pow(s, x) * std::pow(x, -param_);
    };
    auto tail = [&](std::uint64_t n) {
      const double x = static_cast<double>(n);
      const double geometric = std::pow(s, x + 1.0) * std::pow(x + 1.0, -param_) / (1.0 - s);
      return std::min(geometric, std::pow(x, 1.0 - param_) / (param_ - 1.0));
    };
    return numeric::sum_series(term, tail, {1e-16, 0.0, 10'000'000});
  }

  [[nodiscard]] double zipf_pgf_derivative(double s) const {
    if (s == 1.0) return mean();
    auto tol = numeric::Tolerance::series();
    tol.max_evals = kZipfSeriesBudget;
    // Terms needed for the geometric factor s^n / (1-s) alone to fall below tolerance.
    const double needed = std::log(tol.abs_tol * (1.0 - s)) / std::log(s);
    if (param_ == 2.0 && needed > static_cast<double>(kZipfSeriesBudget)) return -std::log1p(-s) / s / zeta_k_;
    try {
      return pgf_derivative_series(s, tol);
    } catch (const BudgetExceeded&) {
      if (param_ != 2.0) throw;
      // k = 2: sum_n s^(n-1) / n = -ln(1-s) / s.
      return -std::log1p(-s) / s / zeta_k_;
    }
  }

  std::uint64_t sample_geometric(numeric::RandomSource& src) const {
    const double u = src.next_uniform_positive();
    const double extra = std::floor(std::log(u) / std::log1p(-param_));
    return 1 + static_cast<std::uint64_t>(std::min(extra, kMaxCount));
  }

  std::uint64_t sample_truncated_poisson(numeric::RandomSource& src) const {
    const double u = src.next_uniform();
    std::uint64_t n = 1;
    double p = pmf(1);
    double cdf = p;
    while (u >= cdf) {
      ++n;
      p *= param_ / static_cast<double>(n);
      if (p == 0.0 || cdf + p == cdf) break;
      cdf += p;
    }
    return n;
  }

  std::uint64_t sample_zipf(numeric::RandomSource& src) const {
    const double am1 = param_ - 1.0;
    const double b = std::pow(2.0, am1);
    for (;;) {
      const double u = src.next_uniform_positive();
      const double v = src.next_uniform();
      const double x = std::floor(std::pow(u, -1.0 / am1));
      if (!(x <= kMaxCount)) continue;
      const double t = std::pow(1.0 + 1.0 / x, am1);
      if (v * x * (t - 1.0) / (b - 1.0) <= t / b) return static_cast<std::uint64_t>(x);
    }
  }

  CountFamily family_;
  double param_;
  double zeta_k_;
};

}  // namespace randext
