#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "randext/count_distribution.hpp"
#include "randext/error.hpp"
#include "randext/input_distribution.hpp"
#include "randext/numeric/quadrature.hpp"
#include "randext/numeric/random_source.hpp"

namespace randext {

enum class ExtremeKind { Max, Min };

inline std::string to_string(ExtremeKind kind) { return kind == ExtremeKind::Max ? "max" : "min"; }

/// Y = max or Z = min of N i.i.d. draws from `input`, with N ~ `count`
/// independent of the draws.
struct ExtremeModel {
  InputDistribution input;
  CountDistribution count;
  ExtremeKind kind;
};

namespace detail {

inline void check_unit_argument(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(what) + ": argument outside [0,1]");
}

/// PGF argument: F(x) for the maximum, 1 - F(x) for the minimum.
inline double pgf_argument(const ExtremeModel& m, double x) {
  return m.kind == ExtremeKind::Max ? m.input.cdf(x) : m.input.survival(x);
}

// Largest N simulated draw by draw; beyond it the extreme of the uniforms is drawn as U^(1/N).
inline constexpr std::uint64_t kDirectDrawLimit = 64;

}  // namespace detail

/// Density g(x) = f(x) sum_n n s^(n-1) p(n) with s = F(x) (max) or 1 - F(x) (min),
/// the sum taken as the PGF derivative of the count law.
inline double extreme_pdf(const ExtremeModel& m, double x) {
  detail::check_unit_argument(x, "extreme_pdf");
  const double f = m.input.pdf(x);
  if (f == 0.0) return 0.0;
  return f * m.count.pgf_derivative(detail::pgf_argument(m, x));
}

/// Same density with the sum always evaluated as a guarded series; the
/// term-by-term route used to cross-check the closed forms.
inline double extreme_pdf_series(const ExtremeModel& m, double x,
                                 const numeric::Tolerance& tol = numeric::Tolerance::series()) {
  detail::check_unit_argument(x, "extreme_pdf_series");
  const double f = m.input.pdf(x);
  if (f == 0.0) return 0.0;
  return f * m.count.pgf_derivative_series(detail::pgf_argument(m, x), tol);
}

/// P(Y <= x) = PGF(F(x)); P(Z <= x) = 1 - PGF(1 - F(x)).
inline double extreme_cdf(const ExtremeModel& m, double x) {
  detail::check_unit_argument(x, "extreme_cdf");
  if (m.kind == ExtremeKind::Max) return m.count.pgf(m.input.cdf(x));
  return 1.0 - m.count.pgf(m.input.survival(x));
}

/// Simulates the process: draw N, then the extreme of N input draws. The
/// extreme of the uniforms is mapped through the (monotone) input quantile once.
inline double extreme_sample(const ExtremeModel& m, numeric::RandomSource& src) {
  const std::uint64_t n = m.count.sample(src);
  if (n <= detail::kDirectDrawLimit) {
    double extreme = m.kind == ExtremeKind::Max ? 0.0 : 1.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const double u = src.next_uniform();
      extreme = m.kind == ExtremeKind::Max ? std::max(extreme, u) : std::min(extreme, u);
    }
    return m.input.quantile(extreme);
  }
  // max of n uniforms ~ U^(1/n); the min is its reflection.
  const double v = std::exp(std::log(src.next_uniform_positive()) / static_cast<double>(n));
  return m.kind == ExtremeKind::Max ? m.input.quantile(v) : m.input.upper_quantile(v);
}

/// E[X^k] by quadrature of x^k g(x) over [0,1], k >= 1.
inline double extreme_moment(const ExtremeModel& m, int k,
                             const numeric::Tolerance& tol = numeric::Tolerance::quadrature()) {
  if (k < 1) throw DomainError("extreme_moment: k must be >= 1");
  return numeric::integrate([&](double x) { return std::pow(x, k) * extreme_pdf(m, x); }, 0.0, 1.0, tol);
}

/// E[e^(tX)] by quadrature.
inline double extreme_mgf(const ExtremeModel& m, double t,
                          const numeric::Tolerance& tol = numeric::Tolerance::quadrature()) {
  return numeric::integrate([&](double x) { return std::exp(t * x) * extreme_pdf(m, x); }, 0.0, 1.0, tol);
}

}  // namespace randext
