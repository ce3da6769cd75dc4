#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "randext/error.hpp"
#include "randext/estimation.hpp"
#include "randext/numeric/optimize.hpp"
#include "randext/numeric/quadrature.hpp"
#include "randext/numeric/random_source.hpp"
#include "randext/numeric/series.hpp"
#include "randext/numeric/tolerance.hpp"

using namespace randext;
using namespace randext::numeric;

namespace {

constexpr double kPi = std::numbers::pi;

// ---- tolerance ----

TEST(Tolerance, DefaultsAreValid) {
  EXPECT_NO_THROW(Tolerance::quadrature().validate());
  EXPECT_NO_THROW(Tolerance::series().validate());
  EXPECT_NO_THROW(Tolerance::optimizer().validate());
}

TEST(Tolerance, RejectsBadFields) {
  EXPECT_THROW((Tolerance{0.0, 0.0, 10}.validate()), ParameterError);
  EXPECT_THROW((Tolerance{1e-10, -1.0, 10}.validate()), ParameterError);
  EXPECT_THROW((Tolerance{1e-10, 0.0, 0}.validate()), ParameterError);
}

// ---- integrate ----

TEST(Integrate, Constant) { EXPECT_NEAR(integrate([](double) { return 1.0; }, 0.0, 1.0), 1.0, 1e-14); }

TEST(Integrate, SugDensityNormalizes) {
  const double theta = 0.5;
  auto g = [&](double x) { return theta / std::pow(1.0 - (1.0 - theta) * x, 2); };
  EXPECT_NEAR(integrate(g, 0.0, 1.0), 1.0, 1e-10);
  // antiderivative: x / (1 - (1-theta) x) * theta ... evaluated at [0, 0.5]
  EXPECT_NEAR(integrate(g, 0.0, 0.5), theta * 0.5 / (1.0 - (1.0 - theta) * 0.5), 1e-12);
}

TEST(Integrate, ArcsineEndpointSingularities) {
  auto f = [](double x) { return 1.0 / (kPi * std::sqrt(x * (1.0 - x))); };
  EXPECT_NEAR(integrate(f, 0.0, 1.0), 1.0, 1e-8);
}

TEST(Integrate, NeverEvaluatesEndpoints) {
  bool touched = false;
  integrate(
      [&](double x) {
        if (x == 0.0 || x == 1.0) touched = true;
        return 1.0 / std::sqrt(x);
      },
      0.0, 1.0);
  EXPECT_FALSE(touched);
}

TEST(Integrate, ExactOnPolynomials) {
  for (int p = 0; p <= 13; ++p) {
    const double got = integrate([p](double x) { return (p + 1) * std::pow(x, p); }, 0.0, 1.0);
    EXPECT_NEAR(got, 1.0, 1e-12) << "degree " << p;
  }
  EXPECT_NEAR(integrate([](double x) { return 3.0 * x * x - 2.0 * x + 1.0; }, -1.0, 2.0), 9.0 - 3.0 + 3.0, 1e-12);
}

TEST(Integrate, RejectsReversedAndEmptyIntervals) {
  EXPECT_THROW(integrate([](double x) { return x; }, 1.0, 0.0), DomainError);
  EXPECT_THROW(integrate([](double x) { return x; }, 0.3, 0.3), DomainError);
}

TEST(Integrate, AgreesWithSimpsonOracle) {
  auto f = [](double x) { return std::log(1.0 / (1.0 - x)) / x; };  // ~ -ln(1-x) singular at 1
  EXPECT_NEAR(integrate(f, 0.0, 1.0), kPi * kPi / 6.0, 1e-9);
  auto h = [](double x) { return std::exp(-3.0 * x) * std::sin(7.0 * x); };
  EXPECT_NEAR(integrate(h, 0.0, 1.0), oracle::gauss_legendre_sine_map(h, 0.0, 1.0), 1e-10);
}

TEST(Integrate, BudgetExceededCarriesEstimate) {
  auto f = [](double x) { return std::sin(1.0 / (x + 1e-3)) / std::sqrt(x); };
  try {
    integrate(f, 0.0, 1.0, Tolerance{1e-14, 0.0, 100});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_TRUE(std::isfinite(e.estimate()));
    EXPECT_GT(e.error_bound(), 0.0);
  }
}

TEST(Integrate, NonFiniteIntegrandIsReported) {
  EXPECT_THROW(integrate([](double) { return std::nan(""); }, 0.0, 1.0), NonFiniteValue);
  EXPECT_THROW(integrate([](double x) { return x; }, 0.0, std::numeric_limits<double>::infinity()), DomainError);
}

// ---- sum_series ----

TEST(SumSeries, Geometric) {
  const double s = sum_series([](std::uint64_t n) { return std::pow(0.5, static_cast<double>(n)); },
                              [](std::uint64_t n) { return std::pow(0.5, static_cast<double>(n)); });
  EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(SumSeries, SugDensityTermsAtHalf) {
  // n y^(n-1) theta (1-theta)^(n-1) at y = theta = 0.5
  auto term = [](std::uint64_t n) {
    const double nn = static_cast<double>(n);
    return nn * std::pow(0.5, nn - 1.0) * 0.5 * std::pow(0.5, nn - 1.0);
  };
  auto tail = [](std::uint64_t n) {
    const double r = 0.25, nn = static_cast<double>(n);
    return 0.5 * std::pow(r, nn) * ((nn + 1.0) / (1.0 - r) + r / ((1.0 - r) * (1.0 - r)));
  };
  EXPECT_NEAR(sum_series(term, tail), 8.0 / 9.0, 1e-9);
}

TEST(SumSeries, ZipfDensityTermsAtHalf) {
  const double c = 6.0 / (kPi * kPi);
  auto term = [c](std::uint64_t n) { return c / static_cast<double>(n) * std::pow(0.5, static_cast<double>(n) - 1.0); };
  auto tail = [c](std::uint64_t n) { return c * 2.0 * std::pow(0.5, static_cast<double>(n)) / static_cast<double>(n + 1); };
  EXPECT_NEAR(sum_series(term, tail), 0.842765913272194517, 1e-9);
}

TEST(SumSeries, StableOnceBelowTolerance) {
  auto term = [](std::uint64_t n) { return 1.0 / (static_cast<double>(n) * std::pow(2.0, static_cast<double>(n))); };
  auto tail = [](std::uint64_t n) { return std::pow(0.5, static_cast<double>(n)) / static_cast<double>(n + 1); };
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    const double coarse = sum_series(term, tail, Tolerance{tol, 0.0, 1000});
    const double fine = sum_series(term, tail, Tolerance{tol / 2.0, 0.0, 1000});
    EXPECT_LT(std::abs(coarse - fine), tol);
    EXPECT_NEAR(fine, std::log(2.0), tol);
  }
}

TEST(SumSeries, BudgetExceededOnSlowTail) {
  auto term = [](std::uint64_t n) { return 1.0 / (static_cast<double>(n) * static_cast<double>(n)); };
  auto tail = [](std::uint64_t n) { return 1.0 / static_cast<double>(n); };
  try {
    sum_series(term, tail, Tolerance{1e-12, 0.0, 1000});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_NEAR(e.estimate(), oracle::direct_sum([](long long n) { return 1.0 / double(n * n); }, 1, 1000), 1e-13);
    EXPECT_NEAR(e.error_bound(), 1e-3, 1e-15);
  }
}

TEST(SumSeries, StartsAtFirst) {
  const double s = sum_series([](std::uint64_t n) { return std::pow(0.5, static_cast<double>(n)); },
                              [](std::uint64_t n) { return std::pow(0.5, static_cast<double>(n)); },
                              Tolerance::series(), 2);
  EXPECT_NEAR(s, 0.5, 1e-12);
}

// ---- maximize_1d ----

TEST(Maximize, Quadratic) {
  const auto m = maximize_1d([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0);
  EXPECT_NEAR(m.argmax, 0.3, 1e-8);
  EXPECT_GT(m.evals, 256u);
}

TEST(Maximize, MonotoneReachesUpperBoundary) {
  const auto m = maximize_1d([](double x) { return x; }, 0.0, 1.0);
  EXPECT_EQ(m.argmax, 1.0);
  const auto lo = maximize_1d([](double x) { return -x; }, 0.25, 1.0);
  EXPECT_EQ(lo.argmax, 0.25);
}

TEST(Maximize, TiesGoToSmallerX) {
  const auto m = maximize_1d([](double) { return 1.0; }, 0.0, 1.0);
  EXPECT_EQ(m.argmax, 0.0);
}

TEST(Maximize, SugLoglikMatchesBruteForceGrid) {
  RandomSource src(11, 0);
  std::vector<double> ys;
  for (int i = 0; i < 50; ++i) {
    const double u = src.next_uniform();
    ys.push_back(u / (0.4 + 0.6 * u));  // SUG max quantile at theta = 0.4
  }
  auto ll = [&](double th) { return sug_loglik(ExtremeKind::Max, ys, th); };
  const auto got = maximize_1d(ll, 1e-9, 1.0 - 1e-9, Tolerance{1e-12, 0.0, 10000});
  const auto [gx, gv] = oracle::grid_argmax(ll, 1e-9, 1.0 - 1e-9, 1'000'001);
  EXPECT_NEAR(got.argmax, gx, 1e-6);
  EXPECT_GE(got.value, gv - 1e-12);
}

TEST(Maximize, Errors) {
  EXPECT_THROW(maximize_1d([](double x) { return x; }, 1.0, 0.0), DomainError);
  EXPECT_THROW(maximize_1d([](double x) { return x; }, 0.0, 1.0, Tolerance::optimizer(), 2), ParameterError);
  EXPECT_THROW(maximize_1d([](double x) { return std::log(x - 0.5); }, 0.0, 1.0), NonFiniteValue);
}

TEST(BisectRoot, FindsRootAndRejectsNonBracket) {
  EXPECT_NEAR(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(bisect_root([](double x) { return x + 1.0; }, 0.0, 1.0), DomainError);
  EXPECT_EQ(bisect_root([](double x) { return x; }, 0.0, 1.0), 0.0);
}

// ---- RandomSource ----

TEST(RandomSource, MeanOfMillionDraws) {
  RandomSource src(2024, 0);
  double sum = 0.0;
  for (int i = 0; i < 1'000'000; ++i) sum += src.next_uniform();
  const double mean = sum / 1e6;
  EXPECT_GE(mean, 0.4985);
  EXPECT_LE(mean, 0.5015);
}

TEST(RandomSource, Deterministic) {
  RandomSource a(7, 3), b(7, 3);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_uniform(), b.next_uniform());
  EXPECT_EQ(a.seed(), 7u);
  EXPECT_EQ(a.stream_id(), 3u);
}

TEST(RandomSource, RangeContracts) {
  RandomSource src(1, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = src.next_uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double v = src.next_uniform_positive();
    ASSERT_GT(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
}

TEST(RandomSource, StreamsAreUncorrelated) {
  RandomSource a(5, 0), b(5, 1), c(6, 0);
  std::vector<double> xa, xb, xc;
  for (int i = 0; i < 100000; ++i) {
    xa.push_back(next_uniform(a));
    xb.push_back(next_uniform(b));
    xc.push_back(next_uniform(c));
  }
  auto corr = [](const std::vector<double>& x, const std::vector<double>& y) {
    const auto mx = oracle::sample_moments(x), my = oracle::sample_moments(y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mx.mean) * (y[i] - my.mean);
    return s / static_cast<double>(x.size() - 1) / (mx.sd * my.sd);
  };
  EXPECT_LT(std::abs(corr(xa, xb)), 0.01);
  EXPECT_LT(std::abs(corr(xa, xc)), 0.01);
}

class ChiSquare : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ChiSquare, SixteenBinsPassAtOnePerMille) {
  RandomSource src(GetParam(), 0);
  std::vector<int> counts(16, 0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(src.next_uniform() * 16.0)];
  const double expected = n / 16.0;
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // upper 0.001 quantile of chi-square with 15 degrees of freedom
  EXPECT_LT(chi2, 37.6973);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ChiSquare, ::testing::Values(0u, 42u, 20240601u));

}  // namespace
