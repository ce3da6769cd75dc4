#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "randext/closed_form.hpp"
#include "randext/error.hpp"
#include "randext/numeric/optimize.hpp"

namespace randext {

/// Observations together with the catalogue entry they are assumed to follow.
class Sample {
 public:
  Sample(std::vector<double> values, Catalogue declared_model)
      : values_(std::move(values)), declared_model_(declared_model) {
    if (values_.empty()) throw DegenerateSample("sample is empty");
    for (double v : values_)
      if (!(v >= 0.0 && v <= 1.0)) throw DomainError("sample value outside [0,1]");
  }

  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] Catalogue declared_model() const noexcept { return declared_model_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double mean() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s / static_cast<double>(values_.size());
  }

 private:
  std::vector<double> values_;
  Catalogue declared_model_;
};

enum class EstimateMethod { ClosedFormMLE, NumericMLE, MomentInversion };

inline std::string to_string(EstimateMethod m) {
  switch (m) {
    case EstimateMethod::ClosedFormMLE:
      return "ClosedFormMLE";
    case EstimateMethod::NumericMLE:
      return "NumericMLE";
    case EstimateMethod::MomentInversion:
      return "MomentInversion";
  }
  return "?";
}

enum class ModelFamily { SUG, CSUG };

struct EstimateResult {
  double theta_hat;
  EstimateMethod method;
  /// Log-likelihood at theta_hat; empty for moment inversion.
  std::optional<double> loglik;
  /// Likelihood evaluations, observations touched, or bisection steps.
  std::size_t evals;
  /// theta_hat lies within 1e-4 of an end of the search interval.
  bool near_boundary = false;
};

/// Search interval for numerical estimators.
inline constexpr double kThetaSearchLo = 1e-9;
inline constexpr double kThetaSearchHi = 1.0 - 1e-9;

namespace detail {

inline bool is_near_boundary(double theta) { return theta < 1e-4 || theta > 1.0 - 1e-4; }

inline double csug_loglik(ExtremeKind kind, const std::vector<double>& values, double theta) {
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += std::log(kind == ExtremeKind::Max ? 1.0 - v : v);
  return n * std::log(theta / (1.0 - theta)) - 2.0 * sum;
}

}  // namespace detail

/// Closed-form CSUG maximum-likelihood estimate: 1 - max (maximum model) or
/// the sample minimum (minimum model). A sample that puts the estimate at 0
/// or 1 is rejected.
inline EstimateResult csug_mle(ExtremeKind kind, const Sample& s) {
  const auto& v = s.values();
  const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  const double theta_hat = kind == ExtremeKind::Max ? 1.0 - *hi_it : *lo_it;
  if (!(theta_hat > 0.0 && theta_hat < 1.0))
    throw DegenerateSample(kind == ExtremeKind::Max ? "CSUG max MLE: sample maximum must lie in (0,1)"
                                                    : "CSUG min MLE: sample minimum must lie in (0,1)");
  return {theta_hat, EstimateMethod::ClosedFormMLE, detail::csug_loglik(kind, v, theta_hat), v.size(),
          detail::is_near_boundary(theta_hat)};
}

/// SUG log-likelihood n ln(theta) - 2 sum ln(1 - (1-theta) y_i) for maxima;
/// minima enter as y_i = 1 - z_i.
inline double sug_loglik(ExtremeKind kind, const std::vector<double>& values, double theta) {
  double sum = 0.0;
  for (double v : values) {
    const double y = kind == ExtremeKind::Max ? v : 1.0 - v;
    sum += std::log1p(-(1.0 - theta) * y);
  }
  return static_cast<double>(values.size()) * std::log(theta) - 2.0 * sum;
}

/// Numerical SUG maximum-likelihood estimate over [1e-9, 1 - 1e-9]: a
/// 256-point scan followed by golden-section refinement.
inline EstimateResult sug_mle_numeric(ExtremeKind kind, const Sample& s) {
  const auto& v = s.values();
  for (double x : v)
    if (!(x > 0.0 && x < 1.0)) throw DegenerateSample("SUG likelihood needs every value strictly inside (0,1)");
  numeric::Tolerance tol{1e-12, 0.0, 10'000};
  const auto best = numeric::maximize_1d([&](double th) { return sug_loglik(kind, v, th); }, kThetaSearchLo,
                                         kThetaSearchHi, tol);
  return {best.argmax, EstimateMethod::NumericMLE, best.value, best.evals, detail::is_near_boundary(best.argmax)};
}

/// The mean of the model as a function of theta.
inline double model_mean(ExtremeKind kind, ModelFamily family, double theta) {
  return family == ModelFamily::SUG ? sug_mean_var(kind, theta).mean : csug_mean_var(kind, theta).mean;
}

/// Solves mean(theta) = sample_mean by bisection. The mean map is checked to
/// be strictly monotone on a 1000-point grid first; a sample mean outside its
/// range over [1e-9, 1 - 1e-9] is reported as a DomainError.
inline EstimateResult moment_inversion(ExtremeKind kind, ModelFamily family, double sample_mean) {
  auto mean_at = [&](double th) { return model_mean(kind, family, th); };

  const double first = mean_at(1e-3);
  const bool increasing = mean_at(2e-3) > first;
  double prev = first;
  for (int i = 2; i < 1000; ++i) {
    const double cur = mean_at(i * 1e-3);
    if (increasing ? !(cur > prev) : !(cur < prev))
      throw std::logic_error("moment_inversion: mean map is not strictly monotone");
    prev = cur;
  }

  const double m_lo = mean_at(kThetaSearchLo);
  const double m_hi = mean_at(kThetaSearchHi);
  if (!(sample_mean > std::min(m_lo, m_hi) && sample_mean < std::max(m_lo, m_hi)))
    throw DomainError("moment_inversion: sample mean " + std::to_string(sample_mean) +
                      " outside the range of the model mean");

  std::size_t steps = 0;
  const double theta_hat = numeric::bisect_root(
      [&](double th) {
        ++steps;
        return mean_at(th) - sample_mean;
      },
      kThetaSearchLo, kThetaSearchHi, 1e-15);
  return {theta_hat, EstimateMethod::MomentInversion, std::nullopt, steps, detail::is_near_boundary(theta_hat)};
}

}  // namespace randext
