#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "randext/error.hpp"
#include "randext/input_distribution.hpp"
#include "randext/numeric/quadrature.hpp"

using namespace randext;

namespace {

std::vector<InputDistribution> all_inputs() {
  return {InputDistribution::uniform(),         InputDistribution::beta22(),
          InputDistribution::arcsine(),         InputDistribution::topp_leone(0.5),
          InputDistribution::topp_leone(1.0),   InputDistribution::topp_leone(2.0)};
}

TEST(InputPdf, ReferenceValues) {
  EXPECT_DOUBLE_EQ(InputDistribution::beta22().pdf(0.5), 1.5);
  EXPECT_NEAR(InputDistribution::arcsine().pdf(0.5), 2.0 / std::numbers::pi, 1e-15);
  EXPECT_DOUBLE_EQ(InputDistribution::topp_leone(1.0).pdf(0.5), 1.0);
  EXPECT_DOUBLE_EQ(InputDistribution::uniform().pdf(0.3), 1.0);
}

TEST(InputPdf, ArcsineEndpointsAreInfinite) {
  EXPECT_TRUE(std::isinf(InputDistribution::arcsine().pdf(0.0)));
  EXPECT_TRUE(std::isinf(InputDistribution::arcsine().pdf(1.0)));
}

TEST(InputCdf, ReferenceValues) {
  EXPECT_DOUBLE_EQ(InputDistribution::beta22().cdf(0.5), 0.5);
  EXPECT_NEAR(InputDistribution::arcsine().cdf(0.5), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(InputDistribution::topp_leone(2.0).cdf(0.5), 0.5625);
}

TEST(InputCdf, ToppLeoneCdfMatchesQuadratureOfPdf) {
  const auto tl2 = InputDistribution::topp_leone(2.0);
  EXPECT_NEAR(oracle::gauss_legendre_sine_map([&](double x) { return tl2.pdf(x); }, 0.0, 0.5), 0.5625, 1e-10);
  const auto tl1 = InputDistribution::topp_leone(1.0);
  EXPECT_NEAR(numeric::integrate([&](double x) { return tl1.pdf(x); }, 0.0, 0.7), 2 * 0.7 - 0.49, 1e-12);
}

TEST(InputCdf, ToppLeoneOneIsBetaOneTwo) {
  const auto tl1 = InputDistribution::topp_leone(1.0);
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    ASSERT_NEAR(tl1.cdf(x), 2.0 * x - x * x, 1e-12) << x;
  }
}

TEST(InputQuantile, ReferenceValues) {
  EXPECT_DOUBLE_EQ(InputDistribution::uniform().quantile(0.25), 0.25);
  EXPECT_NEAR(InputDistribution::arcsine().quantile(0.5), 0.5, 1e-15);
  const auto b = InputDistribution::beta22();
  const double root = oracle::bisection([](double x) { return 3 * x * x - 2 * x * x * x - 0.5; }, 0.0, 1.0);
  EXPECT_NEAR(b.quantile(0.5), root, 1e-12);
  EXPECT_NEAR(b.quantile(0.5), 0.5, 1e-12);
}

TEST(InputQuantile, EndpointsMapToSupportEnds) {
  for (const auto& d : all_inputs()) {
    EXPECT_EQ(d.quantile(0.0), 0.0) << d.name();
    EXPECT_NEAR(d.quantile(1.0), 1.0, 1e-15) << d.name();
    EXPECT_NEAR(d.upper_quantile(0.0), 1.0, 1e-15) << d.name();
    EXPECT_NEAR(d.upper_quantile(1.0), 0.0, 1e-15) << d.name();
  }
}

TEST(InputQuantile, UpperQuantileReflectsQuantile) {
  for (const auto& d : all_inputs())
    for (double v : {0.1, 0.37, 0.5, 0.9}) EXPECT_NEAR(d.upper_quantile(v), d.quantile(1.0 - v), 1e-12) << d.name();
}

TEST(InputQuantile, UpperQuantileResolvesTinyTails) {
  // 1 - 1e-20 rounds to 1 in double; upper_quantile still separates it. The
  // answer sits ~6e-11 below 1, where one ulp of x moves the survival by ~4e-6 relative.
  const auto b = InputDistribution::beta22();
  const double x = b.upper_quantile(1e-20);
  EXPECT_LT(x, 1.0);
  EXPECT_NEAR(b.survival(x) / 1e-20, 1.0, 1e-5);
}

class InputProperties : public ::testing::TestWithParam<int> {
 protected:
  InputDistribution dist() const { return all_inputs()[static_cast<std::size_t>(GetParam())]; }
};

TEST_P(InputProperties, Normalizes) {
  const auto d = dist();
  EXPECT_NEAR(numeric::integrate([&](double x) { return d.pdf(x); }, 0.0, 1.0), 1.0, 1e-8) << d.name();
}

TEST_P(InputProperties, CdfNondecreasingWithFixedEnds) {
  const auto d = dist();
  EXPECT_EQ(d.cdf(0.0), 0.0);
  EXPECT_EQ(d.cdf(1.0), 1.0);
  double prev = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double c = d.cdf(i / 1000.0);
    ASSERT_GE(c, prev) << d.name() << " at " << i;
    ASSERT_NEAR(c + d.survival(i / 1000.0), 1.0, 1e-15);
    prev = c;
  }
}

TEST_P(InputProperties, QuantileInvertsCdf) {
  const auto d = dist();
  for (int i = 1; i < 1000; ++i) {
    const double x = i / 1000.0;
    ASSERT_NEAR(d.quantile(d.cdf(x)), x, 1e-9) << d.name() << " at " << x;
  }
}

TEST_P(InputProperties, CdfDerivativeIsPdf) {
  const auto d = dist();
  for (int i = 10; i <= 990; i += 5) {
    const double x = i / 1000.0;
    const double fd = oracle::central_difference([&](double t) { return d.cdf(t); }, x, 1e-5);
    ASSERT_NEAR(fd, d.pdf(x), 1e-6 * std::max(1.0, d.pdf(x))) << d.name() << " at " << x;
  }
}

TEST_P(InputProperties, PdfNonnegative) {
  const auto d = dist();
  for (int i = 1; i < 1000; ++i) ASSERT_GE(d.pdf(i / 1000.0), 0.0);
}

TEST_P(InputProperties, DomainErrorsOutsideUnitInterval) {
  const auto d = dist();
  for (double bad : {-1e-12, 1.0 + 1e-12, std::nan("")}) {
    EXPECT_THROW((void)d.pdf(bad), DomainError);
    EXPECT_THROW((void)d.cdf(bad), DomainError);
    EXPECT_THROW((void)d.survival(bad), DomainError);
    EXPECT_THROW((void)d.quantile(bad), DomainError);
    EXPECT_THROW((void)d.upper_quantile(bad), DomainError);
  }
}

INSTANTIATE_TEST_SUITE_P(Families, InputProperties, ::testing::Range(0, 6));

TEST(InputDistribution, ToppLeoneRejectsBadShape) {
  EXPECT_THROW(InputDistribution::topp_leone(0.0), ParameterError);
  EXPECT_THROW(InputDistribution::topp_leone(-1.0), ParameterError);
  EXPECT_THROW(InputDistribution::topp_leone(std::numeric_limits<double>::infinity()), ParameterError);
}

TEST(InputDistribution, NamesAndFamilies) {
  EXPECT_EQ(InputDistribution::uniform().name(), "uniform");
  EXPECT_EQ(InputDistribution::beta22().family(), InputFamily::Beta22);
  EXPECT_EQ(InputDistribution::topp_leone(3.0).shape(), 3.0);
}

}  // namespace
