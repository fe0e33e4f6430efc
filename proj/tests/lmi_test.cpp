#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kanto/error.hpp"
#include "kanto/lmi.hpp"
#include "kanto/spectral_form.hpp"

namespace {

using kanto::DeltaVector;
using kanto::GridAxis;
using kanto::GridSpec;
using kanto::OmegaBox;
using kanto::SamplePlan;
using kanto::Vec;

double norm(const Vec& y) {
  double s = 0.0;
  for (double v : y) s += v * v;
  return std::sqrt(s);
}

TEST(VerifyHLmi, AllTwosPass) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto plan = SamplePlan::defaults(n).scaled(n >= 4 ? 0.05 : 1.0);
    const auto r = kanto::verify_h_lmi(DeltaVector::constant(n, 2.0), plan);
    EXPECT_TRUE(r.passed) << n;
    EXPECT_GT(r.worst_value, 0.0);
  }
}

TEST(VerifyHLmi, TwoDimBoundary) {
  const auto r = kanto::verify_h_lmi(DeltaVector::constant(2, 6.0), SamplePlan::defaults(2));
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.worst_value, 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r.worst_point[0]), std::sqrt(0.5), 1e-9);
  EXPECT_NEAR(std::abs(r.worst_point[1]), std::sqrt(0.5), 1e-9);
}

TEST(VerifyHLmi, TwoDimBeyondBoundaryFails) {
  const auto r = kanto::verify_h_lmi(DeltaVector::constant(2, 6.2), SamplePlan::defaults(2));
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(std::abs(r.worst_point[0]), std::sqrt(0.5), 1e-2);
  EXPECT_NEAR(std::abs(r.worst_point[1]), std::sqrt(0.5), 1e-2);
}

TEST(VerifyHLmi, ReportIsConsistent) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(2.0, 8.0);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      Vec v(DeltaVector::pair_count(n));
      for (auto& x : v) x = u(rng);
      const DeltaVector d(n, v);
      const auto plan = SamplePlan::defaults(n, 7).scaled(0.05);
      const auto r = kanto::verify_h_lmi(d, plan);
      EXPECT_EQ(r.passed, r.worst_value >= -r.tolerance);
      EXPECT_NEAR(kanto::min_eigenvalue(kanto::h_form(d, r.worst_point)), r.worst_value, 1e-12);
      EXPECT_NEAR(norm(r.worst_point), 1.0, 1e-12);
      EXPECT_EQ(r.samples, plan.total(n));
      EXPECT_EQ(r.seed, 7u);
    }
  }
}

TEST(VerifyHLmi, SphereSufficiency) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(2.0, 8.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    Vec v(DeltaVector::pair_count(n));
    for (auto& x : v) x = u(rng);
    const DeltaVector d(n, v);
    Vec y(n);
    for (auto& x : y) x = 3.0 * g(rng);
    const double r = norm(y);
    Vec unit = y;
    for (auto& x : unit) x /= r;
    const double full = kanto::min_eigenvalue(kanto::h_form(d, y));
    const double onsphere = kanto::min_eigenvalue(kanto::h_form(d, unit));
    EXPECT_NEAR(full, r * r * onsphere, 1e-10 * std::max(1.0, std::abs(full)));
  }
}

TEST(VerifyHLmi, ConstantSolutionInterval) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(2.0, 2.0 * std::sqrt(3.0));
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto plan = SamplePlan::defaults(n).scaled(n == 4 ? 0.1 : 0.2);
    for (double c : {2.0, u(rng), u(rng), 2.0 * std::sqrt(3.0)}) {
      EXPECT_TRUE(kanto::verify_h_lmi(DeltaVector::constant(n, c), plan).passed)
          << "n=" << n << " c=" << c;
    }
  }
}

TEST(SolutionInterval, BothCandidatesReported) {
  const auto checks = kanto::solution_interval_check(3, SamplePlan::defaults(3).scaled(0.1), 5, 9);
  EXPECT_NEAR(checks[0].upper, std::sqrt(2.0) + std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(checks[1].upper, 2.0 * std::sqrt(3.0), 1e-14);
  EXPECT_TRUE(checks[0].passed);
  EXPECT_TRUE(checks[1].passed);
  EXPECT_EQ(checks[1].random_trials, 5u);
}

TEST(ChiPsi, ValueExamples) {
  const auto a = kanto::chi_psi_values(2, 2, 2);
  EXPECT_DOUBLE_EQ(a.psi, 8.0);
  EXPECT_DOUBLE_EQ(a.chi1, 12.0);
  EXPECT_DOUBLE_EQ(kanto::chi_psi_values(2, 2, 4).psi, 4.0);
  EXPECT_DOUBLE_EQ(kanto::chi_psi_values(3, 3, 3).psi, 12.0);
  EXPECT_DOUBLE_EQ(kanto::chi_psi_values(2, 6, 2).chi1, -12.0);
}

// psi is concave in each argument, so its minimum over the box sits at a
// vertex; the vertex values are {8, 4} only.
TEST(ChiPsi, PsiVertexMinimum) {
  double lo = 1e300;
  for (double a : {2.0, 4.0})
    for (double b : {2.0, 4.0})
      for (double c : {2.0, 4.0}) lo = std::min(lo, kanto::chi_psi_values(a, b, c).psi);
  EXPECT_EQ(lo, 4.0);
}

TEST(ChiPsi, DefaultGridPasses) {
  const auto r = kanto::chi_psi_grid_check(GridSpec::cube(3, 2.0, 4.0, 41));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.nodes, 41u * 41u * 41u);
  const auto& psi = r.worst[4];
  EXPECT_EQ(psi.check, "psi");
  EXPECT_EQ(psi.value, 4.0);
  int at_two = 0, at_four = 0;
  for (double c : psi.coords) {
    at_two += c == 2.0;
    at_four += c == 4.0;
  }
  EXPECT_EQ(at_two, 2);
  EXPECT_EQ(at_four, 1);
}

TEST(ChiPsi, ExtendedBoxFails) {
  GridSpec g{{GridAxis{2, 2, 1}, GridAxis{2, 6, 5}, GridAxis{2, 2, 1}}};
  const auto r = kanto::chi_psi_grid_check(g);
  EXPECT_FALSE(r.passed);
  EXPECT_LE(r.worst[0].value, -12.0);
  EXPECT_FALSE(r.worst[0].passed);
}

TEST(ChiPsi, SingleNode) {
  GridSpec g{{GridAxis{3, 3, 1}, GridAxis{3, 3, 1}, GridAxis{3, 3, 1}}};
  const auto r = kanto::chi_psi_grid_check(g);
  EXPECT_EQ(r.worst[4].value, 12.0);
}

TEST(GridSpec, Validation) {
  EXPECT_THROW((GridSpec{{GridAxis{2, 3, 1}}}.validate()), kanto::Error);
  EXPECT_THROW((GridSpec{{GridAxis{3, 2, 4}}}.validate()), kanto::Error);
  EXPECT_THROW((GridSpec{{GridAxis{2, 3, 0}}}.validate()), kanto::Error);
  EXPECT_THROW(GridSpec{}.validate(), kanto::Error);
  const GridAxis a{2.0, 4.0, 21};
  EXPECT_EQ(a.node(0), 2.0);
  EXPECT_EQ(a.node(20), 4.0);
  const auto g = GridSpec::cube(2, 0.0, 1.0, 3);
  EXPECT_EQ(g.cell_count(), 9u);
  double c[2];
  g.coords(5, c);
  EXPECT_EQ(c[0], 0.5);
  EXPECT_EQ(c[1], 1.0);
}

TEST(RobustPsd, TrivialCell) {
  GridSpec w{{GridAxis{2, 2, 1}, GridAxis{2, 2, 1}, GridAxis{2, 2, 1}}};
  GridSpec ab{{GridAxis{0, 0, 1}, GridAxis{0, 0, 1}}};
  const auto r = kanto::robust_psd_grid(kanto::Form3::kM, w, ab);
  EXPECT_NEAR(r.worst.value, 1.0, 1e-15);
  EXPECT_TRUE(r.passed);
}

TEST(RobustPsd, CoarseAndRefinedGridsPass) {
  for (auto f : {kanto::Form3::kM, kanto::Form3::kP, kanto::Form3::kQ}) {
    const auto coarse = kanto::robust_psd_grid(f, GridSpec::cube(3, 2, 4, 6), GridSpec::cube(2, -1, 1, 11));
    const auto fine = kanto::robust_psd_grid(f, GridSpec::cube(3, 2, 4, 11), GridSpec::cube(2, -1, 1, 21));
    EXPECT_TRUE(coarse.passed);
    EXPECT_TRUE(fine.passed);
    EXPECT_LE(fine.worst.value, coarse.worst.value);
    EXPECT_EQ(fine.cells, 11u * 11u * 11u * 21u * 21u);
  }
}

TEST(RobustPsd, OutsideBoxIsExploratory) {
  GridSpec w{{GridAxis{6, 6, 1}, GridAxis{6, 6, 1}, GridAxis{6, 6, 1}}};
  GridSpec ab{{GridAxis{1, 1, 1}, GridAxis{1, 1, 1}}};
  const auto r = kanto::robust_psd_grid(kanto::Form3::kM, w, ab);
  EXPECT_NEAR(r.worst.value, kanto::min_eigenvalue(kanto::m_form({6, 6, 6}, 1, 1)), 1e-15);
}

TEST(Polynomial, EvaluateAndDifferentiate) {
  const kanto::Polynomial p({1, -2, 0, 3});  // 1 - 2x + 3x^3
  EXPECT_DOUBLE_EQ(p(2.0), 21.0);
  const auto d = p.derivative();
  EXPECT_DOUBLE_EQ(d(2.0), 34.0);
  EXPECT_DOUBLE_EQ(p.derivative(3)(0.7), 18.0);
  EXPECT_EQ(p.derivative(4).coefficient(0), 0.0);
}

TEST(DetmAlphaPoly, ReproducesDeterminant) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> uw(2.0, 4.0), ua(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const OmegaBox w{uw(rng), uw(rng), uw(rng)};
    const double b = ua(rng);
    const auto p = kanto::detm_alpha_poly(w, b);
    for (int k = 0; k < 50; ++k) {
      const double a = ua(rng);
      const double ref = kanto::det(kanto::m_form(w, a, b));
      EXPECT_NEAR(p(a), ref, 1e-9 * std::max(1.0, std::abs(ref)));
    }
    EXPECT_NEAR(p.coefficient(0), kanto::det_m_alpha0(w, b), 1e-9);
    EXPECT_NEAR(p.coefficient(1), 0.0, 1e-9);
    EXPECT_NEAR(p.coefficient(3), 0.0, 1e-9);
    EXPECT_NEAR(p.coefficient(5), 0.0, 1e-9);
    EXPECT_NEAR(p.coefficient(6), 0.75 * w.w1 * w.w3, 1e-9);
  }
}

TEST(DetMAlpha, SecondDerivativeAtOrigin) {
  const auto p = kanto::detm_alpha_poly({2, 2, 2}, 0.0);
  EXPECT_NEAR(p.derivative(2)(0.0), 2.0 * p.coefficient(2), 1e-12);
  EXPECT_GE(p.coefficient(2), -1e-9);
}

TEST(DetMAlpha, MinimumAtAlphaZero) {
  const auto p = kanto::detm_alpha_poly({4, 4, 4}, 1.0);
  EXPECT_NEAR(p(0.0), 36.0, 1e-9);
  for (int k = 0; k <= 40; ++k) EXPECT_GE(p(-1.0 + k / 20.0), 36.0 - 1e-9);
}

TEST(DetMAlpha, CoarseGridPasses) {
  const auto r = kanto::det_m_alpha_check(GridSpec::cube(3, 2, 4, 6), GridSpec::cube(1, -1, 1, 11), 21);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.cells, 6u * 6u * 6u * 11u);
  EXPECT_EQ(r.det_alpha0.check, "det_m_alpha0");
  EXPECT_GT(r.det_alpha0.value, 0.0);
}

TEST(GridCsv, RowFormat) {
  EXPECT_EQ(kanto::grid_csv_header(), "grid,check,omega1,omega2,omega3,alpha,beta,value,passed");
  kanto::GridWorst w{"chi_psi", "psi", {2, 2, 4}, 4.0, true};
  EXPECT_EQ(kanto::grid_csv_row(w), "chi_psi,psi,2,2,4,,,4,true");
}

}  // namespace
