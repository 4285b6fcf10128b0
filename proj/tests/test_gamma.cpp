#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mlpade/gamma.hpp"
#include "support.hpp"

using namespace mlpade;
using testing_support::rel_diff;
using testing_support::thrown_code;

TEST(Gamma, IntegerAndHalfIntegerValues) {
  EXPECT_EQ(mlpade::gamma(1.0).value, 1.0);
  EXPECT_NEAR(mlpade::gamma(5.0).value, 24.0, 1e-12);
  EXPECT_LE(rel_diff(mlpade::gamma(0.5).value, std::sqrt(std::numbers::pi)), 1e-14);
  EXPECT_LE(rel_diff(mlpade::gamma(0.5).value, 1.772453850905516), 1e-14);
}

// Reference values from 50-digit arithmetic.
TEST(Gamma, FrozenReferenceValues) {
  EXPECT_LE(rel_diff(mlpade::gamma(-2.5).value, -0.94530872048294188), 1e-13);
  EXPECT_LE(rel_diff(mlpade::gamma(-0.3).value, -4.3268511088251927), 1e-13);
  EXPECT_LE(rel_diff(mlpade::gamma(7.3).value, 1271.4236336639088), 1e-13);
  EXPECT_LE(rel_diff(mlpade::gamma(150.5).value, 4.6610726270973779e+261), 1e-12);
  EXPECT_LE(rel_diff(gamma_ratio(0.1, -0.4), -2.5553470900087997), 1e-13);
}

TEST(Gamma, PolesAreFlagged) {
  for (double x : {0.0, -1.0, -2.0, -7.0}) {
    const auto g = mlpade::gamma(x);
    EXPECT_TRUE(g.is_pole) << x;
    EXPECT_TRUE(std::isinf(g.value)) << x;
    EXPECT_EQ(rgamma(x), 0.0) << x;
  }
  EXPECT_FALSE(mlpade::gamma(-0.5).is_pole);
}

TEST(Gamma, RatioWithPoleInDenominatorIsZero) {
  EXPECT_EQ(gamma_ratio(0.5, 0.0), 0.0);
  EXPECT_EQ(gamma_ratio(-0.5, -3.0), 0.0);
  EXPECT_EQ(gamma_ratio(1.0, 1.0), 1.0);
}

TEST(Gamma, RatioWithPoleInNumeratorThrows) {
  EXPECT_EQ(thrown_code([] { gamma_ratio(-2.0, 1.5); }), Errc::NumeratorPole);
}

TEST(Gamma, OverflowAndNonFiniteArguments) {
  EXPECT_EQ(thrown_code([] { mlpade::gamma(172.0); }), Errc::Overflow);
  EXPECT_EQ(thrown_code([] { mlpade::gamma(std::nan("")); }), Errc::DomainError);
  EXPECT_EQ(thrown_code([] { rgamma(INFINITY); }), Errc::DomainError);
  // The reciprocal stays finite past the overflow point.
  EXPECT_GT(rgamma(175.0), 0.0);
  EXPECT_LT(rgamma(175.0), 1e-300);
}

TEST(Gamma, ReflectionIdentity) {
  for (int i = 1; i < 100; ++i) {
    const double x = -4.95 + 0.1 * i;
    if (std::abs(x - std::round(x)) < 1e-9) continue;
    const double lhs = mlpade::gamma(x).value * mlpade::gamma(1.0 - x).value;
    const double rhs = std::numbers::pi / std::sin(std::numbers::pi * x);
    EXPECT_LE(rel_diff(lhs, rhs), 1e-13) << x;
  }
}

TEST(Gamma, RecurrenceIdentity) {
  for (int i = 0; i < 200; ++i) {
    const double x = -5.0 + 0.05 * i + 0.013;
    EXPECT_LE(rel_diff(mlpade::gamma(x + 1.0).value, x * mlpade::gamma(x).value), 1e-13) << x;
  }
}

TEST(Gamma, ReciprocalConsistency) {
  for (int i = 0; i < 200; ++i) {
    const double x = -6.0 + 0.07 * i + 0.001;
    EXPECT_LE(rel_diff(rgamma(x) * mlpade::gamma(x).value, 1.0), 1e-14) << x;
  }
}
