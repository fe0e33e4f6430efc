#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kanto/error.hpp"
#include "kanto/kantorovich.hpp"
#include "kanto/spd.hpp"
#include "kanto/spectral_form.hpp"
#include "oracle.hpp"

namespace {

using kanto::MatrixSpec;
using kanto::Vec;

MatrixSpec diag(Vec l) { return kanto::spec_from_eigenvalues(l); }

Vec gaussian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec x(n);
  for (auto& v : x) v = g(rng);
  return x;
}

double norm2(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

TEST(KValue, Examples) {
  const auto eye = diag({1, 1});
  EXPECT_DOUBLE_EQ(kanto::k_value(eye, Vec{1, 1}), 4.0);
  EXPECT_NEAR(kanto::k_value(diag({1, 6}), Vec{1, 1}), 49.0 / 6.0, 1e-14);
  EXPECT_EQ(kanto::k_value(diag({1, 6}), Vec{0, 0}), 0.0);
  EXPECT_NEAR(kanto::f_value(diag({1, 6}), Vec{1, 1}), 49.0 / 24.0, 1e-14);
}

TEST(KGradient, Examples) {
  EXPECT_EQ(kanto::k_gradient(diag({1, 6}), Vec{0, 0}), (Vec{0, 0}));
  const Vec g = kanto::k_gradient(diag({1, 1}), Vec{1, 1});
  EXPECT_NEAR(g[0], 2.0, 1e-14);
  EXPECT_NEAR(g[1], 2.0, 1e-14);
  const Vec g6 = kanto::k_gradient(diag({1, 6}), Vec{1, 1});
  EXPECT_NEAR(g6[0], 49.0 / 12.0, 1e-14);
  EXPECT_NEAR(g6[1], 49.0 / 12.0, 1e-14);
}

TEST(KHessian, Examples) {
  const auto zero = kanto::k_hessian(diag({1, 6}), Vec{0, 0});
  EXPECT_EQ(zero.norm_inf(), 0.0);

  const auto h = kanto::k_hessian(diag({1, 6}), Vec{1, 1});
  EXPECT_NEAR(h(0, 0), 73.0 / 12.0, 1e-14);
  EXPECT_NEAR(h(1, 1), 73.0 / 12.0, 1e-14);
  EXPECT_NEAR(h(0, 1), 37.0 / 6.0, 1e-14);
  EXPECT_NEAR(kanto::min_eigenvalue(h), -1.0 / 12.0, 1e-13);

  const auto e = kanto::k_hessian(diag({1, 1}), Vec{1, 0});
  EXPECT_NEAR(e(0, 0), 3.0, 1e-15);
  EXPECT_NEAR(e(1, 1), 1.0, 1e-15);
  EXPECT_NEAR(e(0, 1), 0.0, 1e-15);
}

TEST(KValue, DimensionMismatch) {
  try {
    kanto::k_value(diag({1, 2}), Vec{1, 2, 3});
    FAIL();
  } catch (const kanto::Error& e) {
    EXPECT_EQ(e.code(), kanto::ErrorCode::kDimensionMismatch);
  }
}

TEST(KValue, Homogeneity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ut(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto spec = kanto::random_spd(n, 1.0, 30.0, rng);
    Vec x = gaussian(n, rng);
    const double t = ut(rng);
    const double k = kanto::k_value(spec, x);
    for (auto& v : x) v *= t;
    EXPECT_NEAR(kanto::k_value(spec, x), std::pow(t, 4) * k, 1e-10 * std::pow(t, 4) * k);
  }
}

TEST(KValue, LowerBoundNormFourth) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto spec = kanto::random_spd(n, 1.0, 100.0, rng);
    const Vec x = gaussian(n, rng);
    const double n4 = norm2(x) * norm2(x);
    EXPECT_GE(kanto::k_value(spec, x), n4 * (1.0 - 1e-10));
  }
}

TEST(KValue, MatchesCholeskyOracle) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto spec = kanto::random_spd(n, 1.0, 30.0, rng);
    const Vec x = gaussian(n, rng);
    const double ref = oracle::k_value(oracle::to_eigen(spec.matrix), oracle::to_eigen(x));
    EXPECT_NEAR(kanto::k_value(spec, x), ref, 1e-11 * ref);
  }
}

TEST(KGradient, FiniteDifferences) {
  std::mt19937_64 rng(29);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto spec = kanto::random_spd(n, 1.0, 20.0, rng);
    const Vec x = gaussian(n, rng);
    const Vec g = kanto::k_gradient(spec, x);
    double gmax = 0.0, dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double h = 1e-5 * (1.0 + std::abs(x[i]));
      Vec xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const double fd = (kanto::f_value(spec, xp) - kanto::f_value(spec, xm)) / (2.0 * h);
      dev = std::max(dev, std::abs(fd - g[i]));
      gmax = std::max(gmax, std::abs(g[i]));
    }
    worst = std::max(worst, dev / gmax);
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(KHessian, FiniteDifferencesOfGradient) {
  std::mt19937_64 rng(31);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto spec = kanto::random_spd(n, 1.0, 20.0, rng);
    const Vec x = gaussian(n, rng);
    worst = std::max(worst, kanto::max_relative_deviation(kanto::k_hessian(spec, x),
                                                          kanto::fd_hessian(spec, x)));
  }
  EXPECT_LT(worst, 1e-6);
}

// Second differences of the scalar K alone; shares no code with the gradient.
TEST(KHessian, ScalarSecondDifferencesOracle) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto spec = kanto::random_spd(n, 1.0, 10.0, rng);
    const Vec x = gaussian(n, rng);
    const Eigen::MatrixXd ref =
        oracle::fd_hessian_f(oracle::to_eigen(spec.matrix), oracle::to_eigen(x));
    const Eigen::MatrixXd mine = oracle::to_eigen(kanto::k_hessian(spec, x));
    EXPECT_LT(oracle::max_abs(mine - ref) / oracle::max_abs(mine), 1e-5);
  }
}

TEST(KHessian, SpectrumMatchesConjugatedForm) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto spec = kanto::random_spd(n, 1.0, 20.0, rng);
    const Vec x = gaussian(n, rng);
    const Vec a = kanto::eigenvalues(kanto::k_hessian(spec, x));
    const Vec b = kanto::eigenvalues(
        kanto::h_form(kanto::delta_from_spec(spec), spec.spectral.rotate(x)));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a[i], b[i], 1e-8 * std::max(1.0, b.back()));
  }
}

TEST(KantorovichBound, Examples) {
  const auto eq = kanto::kantorovich_bound_check(diag({1, 1, 1}), Vec{1, 2, -1});
  EXPECT_NEAR(eq.lhs, 36.0, 1e-12);
  EXPECT_NEAR(eq.rhs, 36.0, 1e-12);
  EXPECT_TRUE(eq.holds);

  const auto ext = kanto::kantorovich_bound_check(diag({1, 6}), Vec{1, 1});
  EXPECT_NEAR(ext.lhs, 49.0 / 6.0, 1e-13);
  EXPECT_NEAR(ext.rhs, 49.0 / 6.0, 1e-13);
  EXPECT_TRUE(ext.holds);
  // The (l1^2 + ln^2) variant gives 37/6 here and is violated.
  EXPECT_NEAR(ext.rhs_squares, 37.0 / 6.0, 1e-13);
  EXPECT_FALSE(ext.holds_squares);

  const auto axis = kanto::kantorovich_bound_check(diag({1, 6}), Vec{1, 0});
  EXPECT_NEAR(axis.lhs, 1.0, 1e-15);
  EXPECT_NEAR(axis.rhs, 49.0 / 24.0, 1e-14);
  EXPECT_TRUE(axis.holds);
}

TEST(KantorovichBound, ZeroVector) {
  try {
    kanto::kantorovich_bound_check(diag({1, 2}), Vec{0, 0});
    FAIL();
  } catch (const kanto::Error& e) {
    EXPECT_EQ(e.code(), kanto::ErrorCode::kZeroVector);
  }
}

TEST(KantorovichBound, HoldsOnRandomCases) {
  std::mt19937_64 rng(43);
  int failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto spec = kanto::random_spd(n, 1.0, 1000.0, rng);
    failures += !kanto::kantorovich_bound_check(spec, gaussian(n, rng)).holds;
  }
  EXPECT_EQ(failures, 0);
}

}  // namespace
