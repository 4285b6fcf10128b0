#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "mlpade/bench.hpp"
#include "mlpade/matml.hpp"
#include "support.hpp"

using namespace mlpade;
using testing_support::test_set;
using testing_support::thrown_code;

namespace {

RealMatrix from_eigen(const Eigen::MatrixXd& m) {
  RealMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

Eigen::MatrixXd to_eigen(const RealMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

// R at a complex argument from the unpaired pole sum.
cdouble eval_complex(const PartialFractionForm& f, cdouble x) {
  cdouble acc = 0.0;
  for (const auto& t : f.all_terms()) acc += t.weight / (x - t.pole);
  return acc;
}

}  // namespace

TEST(MatrixFunction, DiagonalMatchesScalar) {
  const auto r = construct(0.5, 1.5, 7, 2);
  const auto f = decompose(r);
  const auto b = RealMatrix::from_rows({{-1.0, 0.0}, {0.0, -4.0}});
  const auto e = mlf_matrix(b, f).value;
  EXPECT_NEAR(e(0, 0), r.eval(1.0), 1e-12);
  EXPECT_NEAR(e(1, 1), r.eval(4.0), 1e-12);
  EXPECT_EQ(e(0, 1), 0.0);
  EXPECT_EQ(e(1, 0), 0.0);
}

TEST(MatrixFunction, RandomDiagonalCases) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 50.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& [a, b] = test_set()[trial % test_set().size()];
    const auto r = construct(a, b, 7, 2);
    const auto f = decompose(r);
    const std::size_t n = 2 + trial % 5;
    RealMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = -u(rng);
    const auto e = mlf_matrix(d, f).value;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double expected = i == j ? r.eval(-d(i, i)) : 0.0;
        EXPECT_LE(std::abs(e(i, j) - expected), 1e-10 * (1.0 + std::abs(expected)));
      }
    }
  }
}

TEST(MatrixFunction, SimilarityInvariance) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> spectrum(0.1, 20.0);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& [a, b] = test_set()[trial % test_set().size()];
    const auto r = construct(a, b, 6, 3);
    const auto f = decompose(r);
    const int n = 3 + trial % 3;
    Eigen::MatrixXd v(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) v(i, j) = entry(rng) + (i == j ? 3.0 : 0.0);
    }
    Eigen::VectorXd lam(n), rl(n);
    for (int i = 0; i < n; ++i) {
      lam(i) = spectrum(rng);
      rl(i) = r.eval(lam(i));
    }
    const Eigen::MatrixXd vinv = v.inverse();
    const Eigen::MatrixXd bm = v * (-lam).asDiagonal() * vinv;
    const Eigen::MatrixXd expected = v * rl.asDiagonal() * vinv;
    const auto got = to_eigen(mlf_matrix(from_eigen(bm), f).value);
    EXPECT_LE((got - expected).cwiseAbs().maxCoeff(), 1e-9 * (1.0 + expected.cwiseAbs().maxCoeff()))
        << trial;
  }
}

TEST(MatrixFunction, NonNormalMatchesEigendecomposition) {
  // Bagley-Torvik system matrix at t = 1: non-symmetric with complex spectrum.
  const auto b = bagley_torvik_matrix(1.0, 0.5);
  const auto f = decompose(construct(0.5, 1.5, 7, 2));
  const Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(b));
  const Eigen::MatrixXcd v = es.eigenvectors();
  Eigen::VectorXcd rl(4);
  for (int i = 0; i < 4; ++i) rl(i) = eval_complex(f, -es.eigenvalues()(i));
  const Eigen::MatrixXcd expected = v * rl.asDiagonal() * v.inverse();
  const auto got = mlf_matrix(b, f, true);
  EXPECT_LE((to_eigen(got.value).cast<cdouble>() - expected).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE(expected.imag().cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE(got.max_imag, 1e-12);
}

TEST(MatrixFunction, ActionMatchesFullMatrix) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& [a, b] = test_set()[trial % test_set().size()];
    const auto r = construct(a, b, 7, 2);
    const auto f = decompose(r);
    RealMatrix m(5, 5);
    std::vector<double> v(5);
    for (std::size_t i = 0; i < 5; ++i) {
      v[i] = entry(rng);
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = entry(rng) - (i == j ? 2.0 : 0.0);
    }
    const auto full = mlf_matrix(m, f).value * v;
    const auto act = mlf_action(m, f, v);
    const auto direct = mlf_action_rational(m, r, v);
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_LE(std::abs(act[i] - full[i]), 1e-10 * (1.0 + std::abs(full[i])));
      EXPECT_LE(std::abs(direct[i] - full[i]), 1e-9 * (1.0 + std::abs(full[i])));
    }
  }
}

TEST(MatrixFunction, ZeroRightHandSide) {
  const auto f = decompose(construct(0.9, 1.9, 5, 4));
  const auto b = bagley_torvik_matrix(2.0, 3.0);
  const auto out = mlf_action(b, f, {0.0, 0.0, 0.0, 0.0});
  for (double x : out) EXPECT_EQ(x, 0.0);
}

TEST(MatrixFunction, Errors) {
  const auto f = decompose(construct(0.5, 1.0, 3, 2));
  const auto pole = f.terms()[0].pole;
  // Spectrum of B contains -pole, so -B - pole I is singular.
  const auto b = RealMatrix::from_rows({{-pole.real(), pole.imag()}, {-pole.imag(), -pole.real()}});
  EXPECT_EQ(thrown_code([&] { mlf_matrix(b, f); }), Errc::Singular);

  EXPECT_EQ(thrown_code([&] { mlf_action(RealMatrix::identity(2), f, {1.0}); }), Errc::DomainError);
  EXPECT_EQ(thrown_code([&] { mlf_matrix(RealMatrix(2, 3), f); }), Errc::DomainError);

  const auto unpaired = decompose_rational(ApproximantSpec::make(0.5, 1.0, 3, 2), RealPoly{1.0},
                                           RealPoly{2.0, 3.0, 1.0}, 1.0);
  EXPECT_EQ(thrown_code([&] { mlf_matrix(RealMatrix::identity(2), unpaired); }),
            Errc::PairingUnavailable);
  EXPECT_EQ(thrown_code([&] { mlf_action(RealMatrix::identity(2), unpaired, {1.0, 1.0}); }),
            Errc::PairingUnavailable);
}
