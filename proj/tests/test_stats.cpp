#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "limitshape/errors.hpp"
#include "limitshape/sampler.hpp"
#include "limitshape/stats.hpp"
#include "limitshape/surfaces.hpp"
#include "oracles.hpp"

using namespace limitshape;

TEST(RotatedBoundary, EmptyAndFullSquare) {
  const int n = 4;
  const auto empty = rotated_boundary(Partition(), n);
  const auto full = rotated_boundary(Partition::square(n), n);
  ASSERT_EQ(empty.size(), 9u);
  for (int m = -n; m <= n; ++m) {
    const double u = m / (n * kSqrt2);
    EXPECT_NEAR(empty[m + n], std::fabs(u), 1e-15);
    EXPECT_NEAR(full[m + n], kSqrt2 - std::fabs(u), 1e-15);
  }
  EXPECT_THROW(rotated_boundary(Partition({5}), 4), ValidationError);
}

TEST(RotatedBoundary, SingleCell) {
  const auto g = rotated_boundary(Partition({1}), 2);
  // Nodes m = -2..2 at u = m/(2√2); the cell lifts the middle node to √2/2.
  EXPECT_NEAR(g[2], kSqrt2 / 2, 1e-15);
  EXPECT_NEAR(g[1], kSqrt2 / 4, 1e-15);
  EXPECT_NEAR(g[3], kSqrt2 / 4, 1e-15);
  const auto r = rotated_boundary_rect(Partition({2}), 1, 3);
  ASSERT_EQ(r.size(), 5u);
}

TEST(LevelGap, TrivialCases) {
  Rng rng(1);
  EXPECT_NEAR(supnorm_level_gap(Tableau(std::vector<std::vector<int>>{{1}}), 1), 0.0, 1e-15);
  const Tableau t = sample_square_tableau(7, rng);
  EXPECT_NEAR(supnorm_level_gap(t, 49), 0.0, 1e-15);
  EXPECT_NEAR(supnorm_level_gap(t, 0), 0.0, 1e-15);
  EXPECT_THROW(supnorm_level_gap(t, 50), ValidationError);
  EXPECT_THROW(supnorm_level_gap(Tableau({{1, 2}}), 1), ValidationError);
}

TEST(LevelGap, HalfFillingAtSixty) {
  Rng base(21);
  const int n = 60, trials = 20;
  double sum = 0;
  for (int i = 0; i < trials; ++i) {
    Rng rng = base.split(i);
    sum += supnorm_level_gap(sample_square_tableau(n, rng), n * n / 2);
  }
  EXPECT_LT(sum / trials, 0.05);
}

TEST(SurfaceGapTest, SingleCell) {
  const SurfaceGap g = surface_gap(Tableau(std::vector<std::vector<int>>{{1}}), 0.1);
  EXPECT_EQ(g.gap, 0.0);
}

TEST(SurfaceGapTest, SquareAndRectangleAtSixty) {
  Rng base(22);
  const int trials = 5;
  double square = 0, rect = 0;
  for (int i = 0; i < trials; ++i) {
    Rng rng = base.split(i);
    const SurfaceGap s = surface_gap(sample_square_tableau(60, rng), 0.1);
    EXPECT_GT(s.cells, 0);
    square += s.gap;
    const SurfaceGap r = rect_surface_gap(sample_rect_tableau(60, 30, rng), 0.1);
    EXPECT_GT(r.cells, 0);
    rect += r.gap;
  }
  EXPECT_LT(square / trials, 0.05);
  EXPECT_LT(rect / trials, 0.07);
}

TEST(SurfaceGapTest, WindowMarksOutsideCells) {
  Rng rng(3);
  const SurfaceGap s = surface_gap(sample_square_tableau(40, rng), 0.1);
  ASSERT_EQ(s.grid.size(), 40u);
  EXPECT_TRUE(std::isnan(s.grid[0][0]));
  EXPECT_FALSE(std::isnan(s.grid[19][19]));
}

TEST(EntryLocation, ForcedCorners) {
  Rng rng(4);
  for (int n : {1, 3, 10}) {
    const Tableau t = sample_square_tableau(n, rng);
    EXPECT_EQ(entry_location_u(t, 1), 0.0);
    EXPECT_EQ(entry_location_u(t, n * n), 0.0);
    EXPECT_NEAR(entry_location_v(t, n * n), kSqrt2, 1e-15);
  }
}

TEST(EntryLocation, MatchesSemicircleLaw) {
  Rng base(5);
  const int n = 80, samples = 500;
  const int k = static_cast<int>(std::lround(0.3 * n * n));
  std::vector<double> u;
  for (int i = 0; i < samples; ++i) {
    Rng rng = base.split(i);
    const Tableau t = sample_square_tableau(n, rng);
    u.push_back(entry_location_u(t, k));
    EXPECT_LE(std::fabs(u.back()), kSqrt2 / 2 + 1e-12);
  }
  EXPECT_LT(ks_statistic(u, [](double x) { return semicircle_cdf(0.3, x); }), 0.08);
}

TEST(FirstRow, Endpoints) {
  Rng rng(6);
  for (int n : {1, 4, 9}) {
    const auto lis = lis_prefix_lengths(sample_square_tableau(n, rng));
    EXPECT_EQ(lis.front(), 1);
    EXPECT_EQ(lis.back(), n);
    for (std::size_t k = 1; k < lis.size(); ++k) EXPECT_LE(lis[k - 1], lis[k]);
  }
}

TEST(FirstRow, LongestIncreasingSubsequenceMatchesQuadratic) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation p = random_permutation(1 + trial % 40, rng);
    for (int prefix = 0; prefix <= static_cast<int>(p.size()); prefix += 3) {
      const std::vector<int> head(p.begin(), p.begin() + prefix);
      EXPECT_EQ(longest_increasing_subsequence(p, prefix), oracle::lis_quadratic(head));
    }
  }
}

TEST(TotalVariation, Examples) {
  EXPECT_EQ(tv_distance_nu_mu(5, 1), 0);
  EXPECT_GT(tv_distance_nu_mu(2, 4), 0);
  EXPECT_LT(tv_distance_nu_mu(100, 8), tv_distance_nu_mu(20, 8));
  EXPECT_THROW(tv_distance_nu_mu(2, 5), ValidationError);
  EXPECT_THROW(tv_distance_nu_mu(10, 21), BudgetError);
}

TEST(TotalVariation, SquareTwoByTwo) {
  // ν on 4 cells of □₂ is the point mass on (2,2); μ₄((2,2)) = 4/24.
  EXPECT_EQ(tv_distance_nu_mu(2, 4), Rational(1) - Rational(4, 24) + Rational(20, 24));
}

TEST(AmusingIdentity, Examples) {
  const AmusingCheck c = verify_amusing_identity(Partition({2, 1}), 3);
  EXPECT_FALSE(c.degenerate);
  EXPECT_EQ(c.lhs, Rational(5, 24));
  EXPECT_EQ(c.rhs, Rational(5, 24));
  EXPECT_TRUE(c.holds());
  const AmusingCheck d = verify_amusing_identity(Partition({3, 1}), 3);
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.rhs, 0);
  EXPECT_FALSE(d.holds());
  EXPECT_TRUE(verify_amusing_identity(Partition(), 4).holds());
}

TEST(AmusingIdentity, RandomShapes) {
  Rng rng(8);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> rows(8);
    for (int& r : rows) r = static_cast<int>(rng.uniform_int(0, 7));
    std::sort(rows.rbegin(), rows.rend());
    const AmusingCheck c = verify_amusing_identity(Partition(rows), 8);
    ASSERT_FALSE(c.degenerate);
    EXPECT_EQ(c.lhs, c.rhs);
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(KolmogorovSmirnov, SelfTest) {
  Rng rng(9);
  const int n = 10000;
  std::vector<double> s(n);
  for (double& x : s) x = rng.uniform01();
  EXPECT_LT(ks_statistic(s, [](double x) { return std::clamp(x, 0.0, 1.0); }), 1.63 / std::sqrt(n));
  EXPECT_THROW(ks_statistic({}, [](double x) { return x; }), ValidationError);
  EXPECT_NEAR(ks_statistic({0.5}, [](double x) { return x; }), 0.5, 1e-15);
}

TEST(ChiSquareTest, Basics) {
  const ChiSquare same = chi_square({10, 20, 30}, {10, 20, 30});
  EXPECT_EQ(same.statistic, 0.0);
  EXPECT_EQ(same.pvalue, 1.0);
  EXPECT_EQ(same.dof, 2);
  EXPECT_THROW(chi_square({5}, {5}), ValidationError);
  EXPECT_THROW(chi_square({5, 5}, {5}), ValidationError);
  EXPECT_THROW(chi_square({5, 5}, {5, 0}), ValidationError);
  // Two bins with statistic 3.841 sit at the 5% point of one degree of freedom.
  const double d = std::sqrt(3.841458820694124 * 50 / 2);
  EXPECT_NEAR(chi_square({50 + d, 50 - d}, {50, 50}).pvalue, 0.05, 1e-9);
}

TEST(PlancherelCrossCheck, SmallSubtableauOfSquare) {
  const int n = 16, k = 4, draws = 20000;
  Rng base(10);
  std::map<Partition, double> freq;
  for (int i = 0; i < draws; ++i) {
    Rng rng = base.split(i);
    freq[sample_square_tableau(n, rng).sub_shape(k)] += 1.0 / draws;
  }
  double tv = 0;
  for (const Partition& lambda : partitions_of(k)) {
    const double d = static_cast<double>(dimension(lambda));
    tv += std::fabs(freq[lambda] - d * d / 24.0);
  }
  EXPECT_LT(tv, 0.1);
}
