#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "bisplit/error.hpp"
#include "bisplit/grid.hpp"
#include "bisplit/oracle/ideal.hpp"
#include "bisplit/resolution.hpp"
#include "bisplit/sampling.hpp"
#include "fixtures.hpp"

namespace bisplit {
namespace {

using testing::kRunexAlpha;

TEST(GridPointSet, AlphaBeta) {
  auto [alpha, beta] = alpha_beta(testing::runex().to_grid());
  EXPECT_EQ(alpha, kRunexAlpha);
  EXPECT_EQ(beta, (Partition{7, 6, 4, 2, 1}));

  auto [a1, b1] = alpha_beta(GridPointSet({{1, 1}}));
  EXPECT_EQ(a1, Partition{1});
  EXPECT_EQ(b1, Partition{1});

  auto [a6, b6] = alpha_beta(testing::six_points());
  EXPECT_EQ(a6, (Partition{3, 2, 1}));
  EXPECT_EQ(b6, (Partition{2, 2, 1, 1}));
}

TEST(GridPointSet, CanonicalRulingOrder) {
  // Row 9 has two points, row 2 one; columns tie and sort by label.
  const GridPointSet x({{2, 5}, {9, 5}, {9, 3}});
  EXPECT_EQ(x.h_labels(), (std::vector<int>{9, 2}));
  EXPECT_EQ(x.v_labels(), (std::vector<int>{5, 3}));
}

TEST(GridPointSet, RejectsDuplicatesAndBadLabels) {
  EXPECT_THROW(GridPointSet({{1, 1}, {1, 1}}), InvalidInput);
  EXPECT_THROW(GridPointSet({{0, 1}}), InvalidInput);
}

TEST(GridPointSet, EmptyConfiguration) {
  const GridPointSet empty;
  auto [a, b] = alpha_beta(empty);
  EXPECT_TRUE(a.empty());
  EXPECT_TRUE(b.empty());
  EXPECT_TRUE(is_acm(empty));
  EXPECT_EQ(render_ferrers(empty), "");
}

TEST(GridPointSet, IsAcm) {
  EXPECT_TRUE(is_acm(testing::runex().to_grid()));
  EXPECT_FALSE(is_acm(testing::six_points()));
  std::vector<Cell> rect;
  for (int h = 1; h <= 3; ++h)
    for (int v = 1; v <= 4; ++v) rect.push_back({h, v});
  EXPECT_TRUE(is_acm(GridPointSet(rect)));
}

TEST(AcmConfig, FromPartition) {
  const GridPointSet g = testing::runex().to_grid();
  EXPECT_EQ(g.size(), 20u);
  EXPECT_TRUE(g.contains({1, 5}));
  EXPECT_TRUE(g.contains({7, 1}));
  EXPECT_FALSE(g.contains({7, 2}));

  EXPECT_EQ(acm_from_partition(Partition{1}).to_grid().cells(), (std::vector<Cell>{{1, 1}}));

  const AcmConfig sq = acm_from_partition(Partition{2, 2}, {2, 3}, {3, 4});
  EXPECT_EQ(sq.to_grid().cells(), (std::vector<Cell>{{2, 3}, {2, 4}, {3, 3}, {3, 4}}));
}

TEST(AcmConfig, LabelErrors) {
  EXPECT_THROW(acm_from_partition(Partition{2, 1}, {1}, {1, 2}), InvalidInput);
  EXPECT_THROW(acm_from_partition(Partition{2, 1}, {1, 2}, {1}), InvalidInput);
  EXPECT_THROW(acm_from_partition(Partition{2, 1}, {1, 1}, {1, 2}), InvalidInput);
  EXPECT_THROW(acm_from_partition(Partition{2, 1}, {1, 2}, {4, 4}), InvalidInput);
  // Surplus vertical labels are ignored.
  EXPECT_EQ(acm_from_partition(Partition{2, 1}, {1, 2}, {1, 2, 3}).v_labels(), (std::vector<int>{1, 2}));
}

TEST(AcmConfig, AsAcmRoundTrip) {
  const AcmConfig c = acm_from_partition(Partition{3, 1}, {7, 4}, {2, 9, 5});
  const auto back = as_acm(c.to_grid());
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->to_grid(), c.to_grid());
  EXPECT_EQ(back->alpha(), (Partition{3, 1}));
  EXPECT_FALSE(as_acm(testing::six_points()).has_value());
}

TEST(Render, Ferrers) {
  EXPECT_EQ(render_ferrers(GridPointSet({{1, 1}})), "*\n");
  EXPECT_EQ(render_ferrers(acm_from_partition(Partition{2, 1}).to_grid()), "**\n*.\n");
  EXPECT_EQ(render_ferrers(testing::six_points()), "***.\n**..\n...*\n");
}

TEST(GridProperties, SizeMatchesPartitionSums) {
  sampling::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const GridPointSet x = sampling::random_grid_subset(rng, 6, 6, 1, 36);
    auto [a, b] = alpha_beta(x);
    ASSERT_EQ(static_cast<int>(x.size()), a.sum());
    ASSERT_EQ(static_cast<int>(x.size()), b.sum());
  }
}

TEST(GridProperties, FerrersPlacementHasConjugateColumns) {
  sampling::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const AcmConfig c = sampling::random_acm(rng, 8, 8, 20);
    auto [a, b] = alpha_beta(c.to_grid());
    ASSERT_EQ(a, c.alpha());
    ASSERT_EQ(b, c.alpha().conjugate());
    ASSERT_TRUE(is_acm(c.to_grid()));
  }
}

TEST(GridProperties, AcmIsInvariantUnderRelabeling) {
  sampling::Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const GridPointSet x = sampling::random_grid_subset(rng, 5, 5, 1, 25);
    std::vector<int> hp{1, 2, 3, 4, 5};
    std::vector<int> vp{1, 2, 3, 4, 5};
    std::shuffle(hp.begin(), hp.end(), rng);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::vector<Cell> moved;
    for (const Cell& c : x.cells())
      moved.push_back({hp[static_cast<std::size_t>(c.h - 1)] + 10, vp[static_cast<std::size_t>(c.v - 1)] + 20});
    ASSERT_EQ(is_acm(x), is_acm(GridPointSet(moved)));
  }
}

// ACM exactly when the oracle's generator scan has the staircase shape
// predicted from alpha_X.
TEST(GridProperties, AcmAgreesWithOracleGeneratorPattern) {
  const oracle::PrimeField field;
  sampling::Rng rng(13);
  int acm_seen = 0;
  auto check = [&](const GridPointSet& x) {
    auto [alpha, beta] = alpha_beta(x);
    const Bidegree rulings{static_cast<int>(x.h_labels().size()), static_cast<int>(x.v_labels().size())};
    const auto b0 = oracle::beta0_box(oracle::IdealPieces::vanishing(field, x), oracle::default_box(rulings));
    oracle::DegreeCounts predicted;
    for (Bidegree c : cx_vx(alpha).generators) predicted[c] += 1;
    const bool acm = is_acm(x);
    acm_seen += acm;
    ASSERT_EQ(acm, b0 == predicted) << render_ferrers(x);
  };
  for (int trial = 0; trial < 60; ++trial) check(sampling::random_grid_subset(rng, 8, 8, 1, 20));
  for (int trial = 0; trial < 20; ++trial) check(sampling::random_acm(rng, 8, 8, 8).to_grid());
  EXPECT_GE(acm_seen, 20);
}

}  // namespace
}  // namespace bisplit
