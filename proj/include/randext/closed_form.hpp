#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "randext/compound_extremes.hpp"
#include "randext/count_distribution.hpp"
#include "randext/error.hpp"
#include "randext/input_distribution.hpp"
#include "randext/numeric/quadrature.hpp"
#include "randext/numeric/random_source.hpp"

namespace randext {

/// Every model with an analytic density.
enum class Catalogue {
  SugMax,
  SugMin,
  CsugMax,
  CsugMin,
  UniformPoissonMax,
  UniformPoissonMin,
  ZipfUniformMax,
  GeomBeta22Max,
  GeomBeta22Min,
  PoissonBeta22Max,
  PoissonBeta22Min,
  GeomArcsineMax,
  GeomArcsineMin,
  PoissonArcsineMax,
  PoissonArcsineMin,
  GeomTLMax,
  GeomTLMin,
  PoissonTLMax,
  PoissonTLMin,
};

struct CatalogueInfo {
  Catalogue entry;
  std::string_view tag;
  ExtremeKind kind;
  bool uses_theta;
  bool uses_lambda;
  bool uses_a;
  /// N depends on the draws; the independent-count scheme does not apply.
  bool correlated;
};

inline constexpr std::array<CatalogueInfo, 19> kCatalogue = {{
    {Catalogue::SugMax, "sug-max", ExtremeKind::Max, true, false, false, false},
    {Catalogue::SugMin, "sug-min", ExtremeKind::Min, true, false, false, false},
    {Catalogue::CsugMax, "csug-max", ExtremeKind::Max, true, false, false, true},
    {Catalogue::CsugMin, "csug-min", ExtremeKind::Min, true, false, false, true},
    {Catalogue::UniformPoissonMax, "uniform-poisson-max", ExtremeKind::Max, false, true, false, false},
    {Catalogue::UniformPoissonMin, "uniform-poisson-min", ExtremeKind::Min, false, true, false, false},
    {Catalogue::ZipfUniformMax, "zipf-uniform-max", ExtremeKind::Max, false, false, false, false},
    {Catalogue::GeomBeta22Max, "geom-beta22-max", ExtremeKind::Max, true, false, false, false},
    {Catalogue::GeomBeta22Min, "geom-beta22-min", ExtremeKind::Min, true, false, false, false},
    {Catalogue::PoissonBeta22Max, "poisson-beta22-max", ExtremeKind::Max, false, true, false, false},
    {Catalogue::PoissonBeta22Min, "poisson-beta22-min", ExtremeKind::Min, false, true, false, false},
    {Catalogue::GeomArcsineMax, "geom-arcsine-max", ExtremeKind::Max, true, false, false, false},
    {Catalogue::GeomArcsineMin, "geom-arcsine-min", ExtremeKind::Min, true, false, false, false},
    {Catalogue::PoissonArcsineMax, "poisson-arcsine-max", ExtremeKind::Max, false, true, false, false},
    {Catalogue::PoissonArcsineMin, "poisson-arcsine-min", ExtremeKind::Min, false, true, false, false},
    {Catalogue::GeomTLMax, "geom-tl-max", ExtremeKind::Max, true, false, true, false},
    {Catalogue::GeomTLMin, "geom-tl-min", ExtremeKind::Min, true, false, true, false},
    {Catalogue::PoissonTLMax, "poisson-tl-max", ExtremeKind::Max, false, true, true, false},
    {Catalogue::PoissonTLMin, "poisson-tl-min", ExtremeKind::Min, false, true, true, false},
}};

inline const CatalogueInfo& catalogue_info(Catalogue entry) { return kCatalogue[static_cast<std::size_t>(entry)]; }

inline std::optional<Catalogue> parse_catalogue(std::string_view tag) {
  for (const auto& info : kCatalogue)
    if (info.tag == tag) return info.entry;
  return std::nullopt;
}

struct ModelParameters {
  double theta = 0.5;
  double lambda = 1.0;
  double a = 2.0;
};

/// Smallest distance of theta from 0 and 1 accepted by the closed forms.
inline constexpr double kThetaGuard = 1e-12;

/// A catalogue entry with validated parameters. Parameters an entry does not
/// use are carried along unvalidated.
class ClosedFormModel {
 public:
  ClosedFormModel(Catalogue entry, ModelParameters params) : entry_(entry), params_(params) {
    const auto& info = catalogue_info(entry);
    if (info.uses_theta && !(params.theta >= kThetaGuard && params.theta <= 1.0 - kThetaGuard))
      throw ParameterError("theta must lie in [1e-12, 1 - 1e-12]");
    if (info.uses_lambda && !(params.lambda > 0.0 && std::isfinite(params.lambda)))
      throw ParameterError("lambda must be a finite value > 0");
    if (info.uses_a && !(params.a > 0.0 && std::isfinite(params.a)))
      throw ParameterError("Topp-Leone a must be a finite value > 0");
  }

  [[nodiscard]] Catalogue entry() const noexcept { return entry_; }
  [[nodiscard]] const CatalogueInfo& info() const { return catalogue_info(entry_); }
  [[nodiscard]] ExtremeKind kind() const { return info().kind; }
  [[nodiscard]] double theta() const noexcept { return params_.theta; }
  [[nodiscard]] double lambda() const noexcept { return params_.lambda; }
  [[nodiscard]] double a() const noexcept { return params_.a; }
  [[nodiscard]] const ModelParameters& parameters() const noexcept { return params_; }

  /// Closed support interval: [0,1] except [0, 1-theta] (CSUG max) and [theta, 1] (CSUG min).
  [[nodiscard]] std::pair<double, double> support() const {
    switch (entry_) {
      case Catalogue::CsugMax:
        return {0.0, 1.0 - params_.theta};
      case Catalogue::CsugMin:
        return {params_.theta, 1.0};
      default:
        return {0.0, 1.0};
    }
  }

 private:
  Catalogue entry_;
  ModelParameters params_;
};

/// The (input, count, kind) triple behind an entry; empty for the correlated CSUG entries.
inline std::optional<ExtremeModel> to_extreme_model(const ClosedFormModel& m) {
  const auto& info = m.info();
  if (info.correlated) return std::nullopt;
  auto geometric = [&] { return CountDistribution::geometric(m.theta()); };
  auto poisson = [&] { return CountDistribution::truncated_poisson(m.lambda()); };
  switch (m.entry()) {
    case Catalogue::SugMax:
    case Catalogue::SugMin:
      return ExtremeModel{InputDistribution::uniform(), geometric(), info.kind};
    case Catalogue::UniformPoissonMax:
    case Catalogue::UniformPoissonMin:
      return ExtremeModel{InputDistribution::uniform(), poisson(), info.kind};
    case Catalogue::ZipfUniformMax:
      return ExtremeModel{InputDistribution::uniform(), CountDistribution::zipf(2.0), info.kind};
    case Catalogue::GeomBeta22Max:
    case Catalogue::GeomBeta22Min:
      return ExtremeModel{InputDistribution::beta22(), geometric(), info.kind};
    case Catalogue::PoissonBeta22Max:
    case Catalogue::PoissonBeta22Min:
      return ExtremeModel{InputDistribution::beta22(), poisson(), info.kind};
    case Catalogue::GeomArcsineMax:
    case Catalogue::GeomArcsineMin:
      return ExtremeModel{InputDistribution::arcsine(), geometric(), info.kind};
    case Catalogue::PoissonArcsineMax:
    case Catalogue::PoissonArcsineMin:
      return ExtremeModel{InputDistribution::arcsine(), poisson(), info.kind};
    case Catalogue::GeomTLMax:
    case Catalogue::GeomTLMin:
      return ExtremeModel{InputDistribution::topp_leone(m.a()), geometric(), info.kind};
    case Catalogue::PoissonTLMax:
    case Catalogue::PoissonTLMin:
      return ExtremeModel{InputDistribution::topp_leone(m.a()), poisson(), info.kind};
    default:
      return std::nullopt;
  }
}

namespace detail {

inline constexpr double kPi = std::numbers::pi;

// [x(1-x)]^(-1/2) / pi
inline double arcsine_density(double x) { return 1.0 / (kPi * std::sqrt(x * (1.0 - x))); }

// 2a(1-x) x^(a-1) (2-x)^(a-1)
inline double topp_leone_density(double a, double x) {
  return 2.0 * a * (1.0 - x) * std::pow(x, a - 1.0) * std::pow(2.0 - x, a - 1.0);
}

// 1 - e^-lambda
inline double poisson_normalizer(double lambda) { return -std::expm1(-lambda); }

inline double geometric_arcsine_min_scheme(double theta, double z) {
  const double d = 1.0 - (1.0 - theta) * (1.0 - 2.0 / kPi * std::asin(std::sqrt(z)));
  return theta * arcsine_density(z) / (d * d);
}

inline double geometric_arcsine_min_printed(double theta, double z) {
  const double d = 1.0 - (1.0 - theta) * (1.0 - 2.0 / kPi) * std::asin(std::sqrt(z));
  return theta * arcsine_density(z) / (d * d);
}

inline double closed_form_density(const ClosedFormModel& m, double x, bool as_printed) {
  const double th = m.theta();
  const double lam = m.lambda();
  const double a = m.a();
  switch (m.entry()) {
    case Catalogue::SugMax: {
      const double d = 1.0 - (1.0 - th) * x;
      return th / (d * d);
    }
    case Catalogue::SugMin: {
      const double d = th + (1.0 - th) * x;
      return th / (d * d);
    }
    case Catalogue::CsugMax:
      return th / ((1.0 - th) * (1.0 - x) * (1.0 - x));
    case Catalogue::CsugMin:
      return th / ((1.0 - th) * x * x);
    case Catalogue::UniformPoissonMax:
      return lam * std::exp(-lam) * std::exp(lam * x) / poisson_normalizer(lam);
    case Catalogue::UniformPoissonMin:
      return lam * std::exp(-lam * x) / poisson_normalizer(lam);
    case Catalogue::ZipfUniformMax: {
      // (6/pi^2) (1/y) ln(1/(1-y)); tends to 6/pi^2 at y = 0.
      const double ratio = x == 0.0 ? 1.0 : -std::log1p(-x) / x;
      return 6.0 / (kPi * kPi) * ratio;
    }
    case Catalogue::GeomBeta22Max: {
      const double d = 1.0 - (1.0 - th) * x * x * (3.0 - 2.0 * x);
      return 6.0 * x * (1.0 - x) * th / (d * d);
    }
    case Catalogue::GeomBeta22Min: {
      const double d = 1.0 - (1.0 - th) * (2.0 * x * x * x - 3.0 * x * x + 1.0);
      return 6.0 * x * (1.0 - x) * th / (d * d);
    }
    case Catalogue::PoissonBeta22Max:
      return 6.0 * lam * x * (1.0 - x) * std::exp(-lam * (2.0 * x * x * x - 3.0 * x * x + 1.0)) /
             poisson_normalizer(lam);
    case Catalogue::PoissonBeta22Min:
      return 6.0 * lam * x * (1.0 - x) * std::exp(-lam * (3.0 * x * x - 2.0 * x * x * x)) / poisson_normalizer(lam);
    case Catalogue::GeomArcsineMax: {
      const double d = 1.0 - (1.0 - th) * 2.0 / kPi * std::asin(std::sqrt(x));
      return th * arcsine_density(x) / (d * d);
    }
    case Catalogue::GeomArcsineMin:
      return as_printed ? geometric_arcsine_min_printed(th, x) : geometric_arcsine_min_scheme(th, x);
    case Catalogue::PoissonArcsineMax:
      return lam * arcsine_density(x) * std::exp(-lam * (1.0 - 2.0 / kPi * std::asin(std::sqrt(x)))) /
             poisson_normalizer(lam);
    case Catalogue::PoissonArcsineMin:
      return lam * arcsine_density(x) * std::exp(-2.0 * lam * std::asin(std::sqrt(x)) / kPi) / poisson_normalizer(lam);
    case Catalogue::GeomTLMax: {
      const double d = 1.0 - (1.0 - th) * std::pow(x, a) * std::pow(2.0 - x, a);
      return topp_leone_density(a, x) * th / (d * d);
    }
    case Catalogue::GeomTLMin: {
      const double d = 1.0 - (1.0 - th) * (1.0 - std::pow(x, a) * std::pow(2.0 - x, a));
      return topp_leone_density(a, x) * th / (d * d);
    }
    case Catalogue::PoissonTLMax:
      return lam * topp_leone_density(a, x) * std::exp(-lam * (1.0 - std::pow(x, a) * std::pow(2.0 - x, a))) /
             poisson_normalizer(lam);
    case Catalogue::PoissonTLMin:
      return lam * topp_leone_density(a, x) * std::exp(-lam * std::pow(x, a) * std::pow(2.0 - x, a)) /
             poisson_normalizer(lam);
  }
  return 0.0;
}

}  // namespace detail

/// Analytic density; 0 outside the entry's support.
/// GeomArcsineMin uses the form derived from the min-of-N scheme.
inline double cf_pdf(const ClosedFormModel& m, double x) {
  const auto [lo, hi] = m.support();
  if (!(x >= lo && x <= hi)) return 0.0;
  return detail::closed_form_density(m, x, false);
}

/// As cf_pdf, but GeomArcsineMin evaluates the literature's typeset variant,
/// whose denominator reads 1 - (1-theta)(1 - 2/pi) arcsin(sqrt z). That
/// variant does not integrate to one; it is kept for comparison only.
inline double cf_pdf_as_printed(const ClosedFormModel& m, double x) {
  const auto [lo, hi] = m.support();
  if (!(x >= lo && x <= hi)) return 0.0;
  return detail::closed_form_density(m, x, true);
}

/// Distribution function. Elementary antiderivatives for SUG, CSUG and
/// Uniform-Poisson; quadrature of cf_pdf for the remaining entries.
inline double cf_cdf(const ClosedFormModel& m, double x,
                     const numeric::Tolerance& tol = numeric::Tolerance::quadrature()) {
  const auto [lo, hi] = m.support();
  if (std::isnan(x)) throw DomainError("cf_cdf: NaN argument");
  if (x <= lo) return 0.0;
  if (x >= hi) return 1.0;
  const double th = m.theta();
  const double lam = m.lambda();
  switch (m.entry()) {
    case Catalogue::SugMax:
      return th * x / (1.0 - (1.0 - th) * x);
    case Catalogue::SugMin:
      return x / (th + (1.0 - th) * x);
    case Catalogue::CsugMax:
      return th * x / ((1.0 - th) * (1.0 - x));
    case Catalogue::CsugMin:
      return (x - th) / ((1.0 - th) * x);
    case Catalogue::UniformPoissonMax:
      return (std::exp(-lam * (1.0 - x)) - std::exp(-lam)) / detail::poisson_normalizer(lam);
    case Catalogue::UniformPoissonMin:
      return -std::expm1(-lam * x) / detail::poisson_normalizer(lam);
    default:
      return numeric::integrate([&](double t) { return cf_pdf(m, t); }, lo, x, tol);
  }
}

struct MeanVariance {
  double mean;
  double variance;
};

namespace detail {

// int_theta^1 u^p du, with the p = -1 branch taken as exactly -ln(theta).
inline double power_integral(double theta, int p) {
  if (p == -1) return -std::log(theta);
  return (1.0 - std::pow(theta, p + 1)) / (p + 1);
}

inline double binomial(int k, int j) {
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c = c * (k - j + i) / i;
  return c;
}

// Below this distance from theta = 1 the mean and variance are summed as power
// series in e = 1 - theta; the closed forms divide by e^2 / e^4 and cancel badly.
inline constexpr double kSeriesSwitch = 0.5;

// (theta^3 - 2theta^2 - theta^2 ln^2 theta + theta) / (1-theta)^4.
// With L = -ln(1-e) and L^2 = sum_n c_n e^n, c_n = 2 H_(n-1) / n, this is
// -(1-e) sum_{n>=4} (c_n - c_(n-1)) e^(n-4), free of cancellation.
inline double sug_variance(double theta) {
  const double e = 1.0 - theta;
  if (e < kSeriesSwitch) {
    double harmonic = 1.0 + 0.5 + 1.0 / 3.0;  // H_(n-1) at n = 4
    double c_prev = 1.0;                      // c_3
    double sum = 0.0;
    double power = 1.0;
    for (int n = 4; n < 400; ++n) {
      const double c = 2.0 * harmonic / n;
      const double term = (c - c_prev) * power;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      c_prev = c;
      harmonic += 1.0 / n;
      power *= e;
    }
    return -(1.0 - e) * sum;
  }
  const double lt = std::log(theta);
  const double num = theta * theta * theta - 2.0 * theta * theta - theta * theta * lt * lt + theta;
  return num / (e * e * e * e);
}

// theta (ln theta + 1/theta - 1) / (1-theta)^2 = sum_j e^j / ((j+1)(j+2)).
inline double sug_max_mean(double theta) {
  const double e = 1.0 - theta;
  if (e < kSeriesSwitch) {
    double sum = 0.5;
    double power = 1.0;
    for (int j = 1; j < 400; ++j) {
      power *= e;
      const double term = power / ((j + 1.0) * (j + 2.0));
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return sum;
  }
  return theta * (std::log(theta) + 1.0 / theta - 1.0) / (e * e);
}

inline double sug_min_mean(double theta) {
  const double e = 1.0 - theta;
  if (e < kSeriesSwitch) return 1.0 - sug_max_mean(theta);
  return theta * (theta - 1.0 - std::log(theta)) / (e * e);
}

}  // namespace detail

/// E[Y^k] (max) or E[Z^k] (min) in the SUG model, from the finite binomial sums
/// theta/(1-theta)^(k+1) sum_j C(k,j) int_theta^1 (-u)^(j-2) du                (max)
/// theta/(1-theta)^(k+1) sum_j C(k,j) (-theta)^j int_theta^1 u^(k-j-2) du       (min)
inline double sug_moment(ExtremeKind kind, int k, double theta) {
  if (k < 1) throw DomainError("sug_moment: k must be >= 1");
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("sug_moment: theta must lie in (0,1)");
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    if (kind == ExtremeKind::Max) {
      const double sign = j % 2 == 0 ? 1.0 : -1.0;
      sum += detail::binomial(k, j) * sign * detail::power_integral(theta, j - 2);
    } else {
      sum += detail::binomial(k, j) * std::pow(-theta, j) * detail::power_integral(theta, k - j - 2);
    }
  }
  return theta / std::pow(1.0 - theta, k + 1) * sum;
}

inline MeanVariance sug_mean_var(ExtremeKind kind, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("sug_mean_var: theta must lie in (0,1)");
  const double mean = kind == ExtremeKind::Max ? detail::sug_max_mean(theta) : detail::sug_min_mean(theta);
  return {mean, detail::sug_variance(theta)};
}

/// E[Y^k] = theta/(1-theta) sum_j C(k,j) int_theta^1 (-u)^(j-2) du        (max)
/// E[Z^k] = theta/(1-theta) int_theta^1 z^(k-2) dz                         (min)
inline double csug_moment(ExtremeKind kind, int k, double theta) {
  if (k < 1) throw DomainError("csug_moment: k must be >= 1");
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("csug_moment: theta must lie in (0,1)");
  if (kind == ExtremeKind::Min) return theta / (1.0 - theta) * detail::power_integral(theta, k - 2);
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    sum += detail::binomial(k, j) * sign * detail::power_integral(theta, j - 2);
  }
  return theta / (1.0 - theta) * sum;
}

/// CSUG mean and variance; the variance is the SUG variance times (1-theta)^2
/// and is the same for the maximum and the minimum.
inline MeanVariance csug_mean_var(ExtremeKind kind, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("csug_mean_var: theta must lie in (0,1)");
  const double e = 1.0 - theta;
  const double lt = std::log(theta);
  // (theta ln theta - theta + 1) / (1-theta) is e times the SUG maximum mean.
  const double mean = kind == ExtremeKind::Max ? e * detail::sug_max_mean(theta) : -theta * lt / e;
  return {mean, detail::sug_variance(theta) * e * e};
}

/// Mean, variance and MGF of the Uniform-Poisson extremes.
struct UniformPoissonStats {
  ExtremeKind kind;
  double lambda;
  double mean;
  double variance;

  /// M(t) = l e^-l (e^(t+l) - 1) / ((t+l)(1 - e^-l))   (max)
  /// M(t) = l (e^(t-l) - 1) / ((t-l)(1 - e^-l))        (min)
  /// with a Taylor branch at the removable singularity t = -l (max) / t = l (min).
  [[nodiscard]] double mgf(double t) const {
    if (t == 0.0) return 1.0;
    const double d = kind == ExtremeKind::Max ? t + lambda : t - lambda;
    const double ratio = std::abs(d) < 1e-6 ? 1.0 + d / 2.0 + d * d / 6.0 : std::expm1(d) / d;
    const double scale = kind == ExtremeKind::Max ? lambda * std::exp(-lambda) : lambda;
    return scale * ratio / detail::poisson_normalizer(lambda);
  }
};

/// The variance of the minimum is taken equal to that of the maximum,
/// 1/l^2 - e^-l/(1-e^-l) - e^-2l/(1-e^-l)^2, as the mirror symmetry of the two
/// densities requires.
inline UniformPoissonStats uniform_poisson_stats(ExtremeKind kind, double lambda) {
  if (!(lambda > 0.0 && std::isfinite(lambda))) throw ParameterError("uniform_poisson_stats: lambda must be > 0");
  const double norm = detail::poisson_normalizer(lambda);
  const double el = std::exp(-lambda);
  UniformPoissonStats s{kind, lambda, 0.0, 0.0};
  if (kind == ExtremeKind::Max) {
    s.mean = 1.0 / norm - 1.0 / lambda;
    s.variance = 1.0 / (lambda * lambda) + 1.0 / norm - 1.0 / (norm * norm);
  } else {
    s.mean = 1.0 / lambda - el / norm;
    s.variance = 1.0 / (lambda * lambda) - el / norm - el * el / (norm * norm);
  }
  return s;
}

/// E[X^k] for any entry: the moment formulas for SUG/CSUG, the printed
/// mean/variance for Uniform-Poisson (k <= 2), quadrature otherwise.
inline double cf_moment(const ClosedFormModel& m, int k,
                        const numeric::Tolerance& tol = numeric::Tolerance::quadrature()) {
  if (k < 1) throw DomainError("cf_moment: k must be >= 1");
  switch (m.entry()) {
    case Catalogue::SugMax:
    case Catalogue::SugMin:
      return sug_moment(m.kind(), k, m.theta());
    case Catalogue::CsugMax:
    case Catalogue::CsugMin:
      return csug_moment(m.kind(), k, m.theta());
    case Catalogue::UniformPoissonMax:
    case Catalogue::UniformPoissonMin:
      if (k <= 2) {
        const auto s = uniform_poisson_stats(m.kind(), m.lambda());
        return k == 1 ? s.mean : s.variance + s.mean * s.mean;
      }
      [[fallthrough]];
    default: {
      const auto [lo, hi] = m.support();
      return numeric::integrate([&](double x) { return std::pow(x, k) * cf_pdf(m, x); }, lo, hi, tol);
    }
  }
}

inline MeanVariance cf_mean_var(const ClosedFormModel& m) {
  switch (m.entry()) {
    case Catalogue::SugMax:
    case Catalogue::SugMin:
      return sug_mean_var(m.kind(), m.theta());
    case Catalogue::CsugMax:
    case Catalogue::CsugMin:
      return csug_mean_var(m.kind(), m.theta());
    case Catalogue::UniformPoissonMax:
    case Catalogue::UniformPoissonMin: {
      const auto s = uniform_poisson_stats(m.kind(), m.lambda());
      return {s.mean, s.variance};
    }
    default: {
      const double m1 = cf_moment(m, 1);
      const double m2 = cf_moment(m, 2);
      return {m1, m2 - m1 * m1};
    }
  }
}

/// CSUG draw: G ~ Geometric(theta) on {1,2,...}, then the max of G uniforms on
/// [0, 1-theta] or the min of G uniforms on [theta, 1].
inline double csug_sample(ExtremeKind kind, double theta, numeric::RandomSource& src) {
  if (!(theta >= kThetaGuard && theta <= 1.0 - kThetaGuard))
    throw ParameterError("csug_sample: theta must lie in [1e-12, 1 - 1e-12]");
  const std::uint64_t g = CountDistribution::geometric(theta).sample(src);
  double u_max;
  if (g <= detail::kDirectDrawLimit) {
    u_max = 0.0;
    for (std::uint64_t i = 0; i < g; ++i) u_max = std::max(u_max, src.next_uniform());
  } else {
    u_max = std::exp(std::log(src.next_uniform_positive()) / static_cast<double>(g));
  }
  // min of G uniforms is distributed as 1 - (max of G uniforms)
  if (kind == ExtremeKind::Max) return (1.0 - theta) * u_max;
  return theta + (1.0 - theta) * (1.0 - u_max);
}

/// One draw from any catalogue entry.
inline double cf_sample(const ClosedFormModel& m, numeric::RandomSource& src) {
  if (m.info().correlated) return csug_sample(m.kind(), m.theta(), src);
  return extreme_sample(*to_extreme_model(m), src);
}

}  // namespace randext
