#include <gtest/gtest.h>

#include <cmath>

#include "mlpade/oracle.hpp"
#include "support.hpp"

using namespace mlpade;
using cdouble = std::complex<double>;
using testing_support::erfcx;
using testing_support::rel_diff;
using testing_support::test_set;
using testing_support::thrown_code;

TEST(Oracle, ExponentialClosedForm) {
  for (int i = 0; i <= 300; ++i) {
    const double x = 0.1 * i;
    EXPECT_LE(rel_diff(mlf_oracle(1.0, 1.0, x), std::exp(-x)), 1e-10) << x;
  }
}

TEST(Oracle, ExponentialIntegralClosedForm) {
  for (int i = 0; i <= 300; ++i) {
    const double x = 0.1 * i;
    EXPECT_LE(rel_diff(mlf_oracle(1.0, 2.0, x), testing_support::e12(x)), 1e-10) << x;
  }
}

TEST(Oracle, ComplementaryErrorFunctionClosedForm) {
  // E_{1/2,1}(-x) = e^{x^2} erfc(x)
  for (int i = 0; i <= 300; ++i) {
    const double x = 0.1 * i;
    EXPECT_LE(rel_diff(mlf_oracle(0.5, 1.0, x), erfcx(x)), 1e-10) << x;
  }
}

TEST(Oracle, DocumentedExamples) {
  EXPECT_NEAR(mlf_oracle(1.0, 1.0, 1.0), 0.36787944117144233, 1e-15);
  EXPECT_LE(rel_diff(mlf_oracle(0.5, 1.0, 1.0), 0.427583576155807), 1e-12);
  EXPECT_EQ(mlf_oracle(0.7, 1.3, 0.0), 1.0 / std::tgamma(1.3));
}

// Reference values from 50-digit arithmetic.
TEST(Oracle, FrozenReferenceValues) {
  struct Case {
    double a, b, x, value;
  };
  const Case cases[] = {
      {0.25, 1.0, 0.5, 0.63767051920039336},   {0.25, 1.0, 3.0, 0.2190044275604068},
      {0.25, 1.0, 40.0, 0.020052912682773117}, {0.5, 0.5, 2.0, 0.053398230926744799},
      {0.5, 0.5, 50.0, 0.00011277028156766194}, {0.5, 1.0, 100.0, 0.0056416137829894329},
      {0.6, 0.6, 10.0, 0.0028711417613393082}, {0.75, 0.75, 8.0, 0.0041752734124672942},
      {0.9, 1.0, 4.9, 0.0356014399282328},     {0.9, 1.0, 5.1, 0.033330088274721633},
      {0.9, 1.0, 14.9, 0.0079892886216669558}, {0.9, 1.0, 15.1, 0.007868838020494915},
      {0.9, 1.9, 7.0, 0.13992096372550062},    {1.0, 1.1, 30.0, 0.003616305317068963},
      {1.0, 1.5, 12.0, 0.049297538391518155},  {0.5, 1.5, 20.0, 0.048591282562947434},
      {0.6, 1.0, 1000.0, 0.000450995811962307},
  };
  for (const auto& c : cases) {
    EXPECT_LE(rel_diff(mlf_oracle(c.a, c.b, c.x), c.value), 1e-11)
        << c.a << "," << c.b << " x=" << c.x;
  }
}

TEST(Oracle, MethodDispatch) {
  EXPECT_EQ(mlf_oracle_detailed(0.9, 1.0, 0.0).method, OracleMethod::Origin);
  EXPECT_EQ(mlf_oracle_detailed(0.9, 1.0, 1.0).method, OracleMethod::Series);
  EXPECT_EQ(mlf_oracle_detailed(0.9, 1.0, 100.0).method, OracleMethod::Asymptotic);
  EXPECT_EQ(mlf_oracle_detailed(0.25, 1.0, 100.0).method, OracleMethod::Contour);
  // The series range shrinks with alpha.
  const OracleConfig cfg;
  EXPECT_LT(series_limit(0.5, cfg), series_limit(0.9, cfg));
  EXPECT_LE(series_limit(1.0, cfg), cfg.series_cutoff);
}

// Each method agrees with its neighbour on both sides of every switch point.
TEST(Oracle, RegimeOverlapAgreement) {
  const OracleConfig cfg;
  for (const auto& [a, b] : test_set()) {
    const double s = series_limit(a, cfg);
    for (double x : {s - 0.1, s, s + 0.1}) {
      EXPECT_LE(rel_diff(mlf_series(a, b, x, cfg), mlf_contour(a, b, x, cfg)), 1e-9)
          << a << "," << b << " x=" << x;
    }
    for (double x : {cfg.asym_cutoff - 0.1, cfg.asym_cutoff + 0.1}) {
      EXPECT_LE(rel_diff(mlf_asym(a, b, x, cfg).value, mlf_contour(a, b, x, cfg)), 1e-9)
          << a << "," << b << " x=" << x;
    }
  }
  for (double x : {4.9, 5.1, 14.9, 15.1}) {
    EXPECT_LE(rel_diff(mlf_oracle(0.9, 1.0, x), mlf_contour(0.9, 1.0, x)), 1e-9) << x;
  }
}

TEST(Oracle, AsymptoticBoundIsHonest) {
  for (const auto& [a, b] : test_set()) {
    if (a <= 0.25) continue;
    for (double x : {20.0, 50.0, 200.0}) {
      const auto s = asymptotic_sum(a, b, x);
      const double ref = mlf_contour(a, b, x);
      // The contour reference is only good to a little over 1e-12 relative.
      EXPECT_LE(std::abs(s.value - ref), s.bound + 1e-11 * std::abs(ref))
          << a << "," << b << " x=" << x;
    }
  }
}

TEST(Oracle, PositiveAndDecreasing) {
  for (const auto& [a, b] : test_set()) {
    double prev = mlf_oracle(a, b, 0.0);
    for (int i = 1; i <= 1000; ++i) {
      const double x = 0.1 * i;
      const double v = mlf_oracle(a, b, x);
      ASSERT_GT(v, 0.0) << a << "," << b << " x=" << x;
      ASSERT_LT(v, prev) << a << "," << b << " x=" << x;
      prev = v;
    }
  }
}

TEST(Oracle, SeriesPrecisionLossIsReported) {
  OracleConfig cfg;
  cfg.series_cutoff = 10.0;
  EXPECT_EQ(thrown_code([&] { mlf_series(0.45, 1.0, 5.0, cfg); }), Errc::PrecisionLoss);
}

TEST(Oracle, UnreachableToleranceFailsLoudly) {
  OracleConfig cfg;
  // Four base nodes cannot meet the default tolerance even after refinement.
  cfg.contour_nodes = 8;
  EXPECT_EQ(thrown_code([&] { mlf_contour(0.6, 1.0, 8.0, cfg); }), Errc::ContourFailure);
}

TEST(Oracle, DomainErrors) {
  EXPECT_EQ(thrown_code([] { mlf_oracle(0.5, 1.0, -1.0); }), Errc::DomainError);
  EXPECT_EQ(thrown_code([] { mlf_oracle(0.5, 1.0, NAN); }), Errc::DomainError);
  EXPECT_EQ(thrown_code([] { mlf_oracle(1.5, 1.0, 1.0); }), Errc::DomainError);
  EXPECT_EQ(thrown_code([] { mlf_series(0.5, 1.0, 6.0); }), Errc::DomainError);
  EXPECT_EQ(thrown_code([] { mlf_contour(0.5, 1.0, 0.0); }), Errc::DomainError);
}

TEST(Oracle, ComplexArgumentClosedForm) {
  // E_{1/2,1}(z) = e^{z^2} erfc(-z); on the real line that is erfcx(-z).
  for (double x : {0.3, 1.0, 2.5, 6.0}) {
    EXPECT_LE(rel_diff(mlf_complex(0.5, 1.0, cdouble(-x, 0.0)).real(), erfcx(x)), 1e-11) << x;
  }
  // E_{1,1}(z) = e^z off the real axis: series, and contour plus residue.
  for (const cdouble z : {cdouble(-1.0, 2.0), cdouble(2.0, 3.0), cdouble(4.0, -1.0)}) {
    EXPECT_LE(std::abs(mlf_complex(1.0, 1.0, z) - std::exp(z)), 1e-11 * std::abs(std::exp(z)))
        << z;
  }
}

// A pole close to the fixed parabola spoils the quadrature; the refinement
// check catches it instead of returning a wrong value.
TEST(Oracle, ComplexPoleNearContourFailsLoudly) {
  for (const cdouble z : {cdouble(-6.0, 3.0), cdouble(-3.0, 4.0)}) {
    EXPECT_EQ(thrown_code([&] { mlf_complex(1.0, 1.0, z); }), Errc::ContourFailure) << z;
  }
}

TEST(Oracle, InverseByBisection) {
  for (const auto& [a, b] : test_set()) {
    for (double frac : {0.9, 0.5, 0.1}) {
      const double y = frac / std::tgamma(b);
      const double x = oracle_inverse(a, b, y);
      EXPECT_LE(rel_diff(mlf_oracle(a, b, x), y), 1e-9) << a << "," << b;
    }
  }
  EXPECT_EQ(oracle_inverse(0.5, 1.0, 1.0), 0.0);
  EXPECT_EQ(thrown_code([] { oracle_inverse(0.5, 1.0, 1.5); }), Errc::DomainError);
}
