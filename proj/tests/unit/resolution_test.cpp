#include <gtest/gtest.h>

#include <algorithm>

#include "bisplit/error.hpp"
#include "bisplit/oracle/ideal.hpp"
#include "bisplit/resolution.hpp"
#include "bisplit/sampling.hpp"
#include "fixtures.hpp"

namespace bisplit {
namespace {

using Gens = std::vector<Bidegree>;
using testing::kRunexAlpha;

const oracle::PrimeField kField;

BettiTable table_of(const Gens& gens, const Gens& syz) {
  BettiTable t;
  for (Bidegree g : gens) t.add(0, g);
  for (Bidegree s : syz) t.add(1, s);
  return t;
}

TEST(CxVx, RunningExample) {
  const CxVx r = cx_vx(kRunexAlpha);
  EXPECT_EQ(r.generators, (Gens{{0, 5}, {1, 4}, {2, 3}, {4, 2}, {6, 1}, {7, 0}}));
  EXPECT_EQ(r.syzygies, (Gens{{1, 5}, {2, 4}, {4, 3}, {6, 2}, {7, 1}}));
}

TEST(CxVx, RunningExampleAgreesWithOracle) {
  const auto ideal = oracle::IdealPieces::vanishing(kField, testing::runex().to_grid());
  const BettiTable oracle_tbl = oracle::oracle_betti_table(ideal, oracle::default_box({7, 5}));
  EXPECT_EQ(oracle_tbl, betti_table(testing::runex_arrangement()));
}

TEST(CxVx, SmallShapes) {
  EXPECT_EQ(cx_vx(Partition{1}).generators, (Gens{{0, 1}, {1, 0}}));
  EXPECT_EQ(cx_vx(Partition{1}).syzygies, (Gens{{1, 1}}));
  // A full rectangle is a complete intersection.
  EXPECT_EQ(cx_vx(Partition{3, 3}).generators, (Gens{{0, 3}, {2, 0}}));
  EXPECT_EQ(cx_vx(Partition{3, 3}).syzygies, (Gens{{2, 3}}));
  EXPECT_THROW(cx_vx(Partition()), InvalidInput);
}

TEST(BettiTable, Bookkeeping) {
  BettiTable t;
  t.add(0, {1, 0});
  t.add(0, {1, 0}, 2);
  t.add(1, {2, 2});
  EXPECT_EQ(t.at(0, {1, 0}), 3);
  EXPECT_EQ(t.total(0), 3);
  EXPECT_EQ(t.max_homological_degree(), 1);
  t.add(1, {2, 2}, -1);
  EXPECT_EQ(t.entries().size(), 1u);
  EXPECT_EQ(t.shifted({1, 1}).at(0, {2, 1}), 3);
  EXPECT_EQ(BettiTable().max_homological_degree(), -1);
}

TEST(BettiTable, Render) {
  const BettiTable t = table_of({{0, 1}, {1, 0}}, {{1, 1}});
  EXPECT_EQ(t.render(), "beta_0: (0,1) (1,0)   [total 2]\nbeta_1: (1,1)   [total 1]\n");
}

TEST(BettiTableOf, ArrangementWithLines) {
  const Arrangement w = Arrangement::tight(1, 2, Partition{3, 2, 2, 1, 1});
  EXPECT_EQ(betti_table(w), table_of({{1, 5}, {2, 4}, {4, 3}, {6, 2}}, {{2, 5}, {4, 4}, {6, 3}}));
  EXPECT_EQ(total_betti(betti_table(w)), (std::pair{4, 3}));

  const Arrangement lines = Arrangement::tight(2, 3, Partition());
  EXPECT_EQ(betti_table(lines), table_of({{2, 3}}, {}));
  EXPECT_EQ(total_betti(betti_table(lines)), (std::pair{1, 0}));
}

TEST(BettiTableOf, RunningExampleTotals) {
  EXPECT_EQ(total_betti(betti_table(testing::runex_arrangement())), (std::pair{6, 5}));
}

// Splitting off (0,5) leaves K = H1 times a 6-row configuration and
// J cap K = H1 V1..V5.
TEST(BettiSplittingSum, OneCutOnRunningExample) {
  const BettiTable i = betti_table(testing::runex_arrangement());
  const BettiTable j = table_of({{0, 5}}, {});
  const BettiTable k = betti_table(Arrangement::tight(1, 0, Partition{4, 3, 3, 2, 2, 1}));
  const BettiTable jk = table_of({{1, 5}}, {});
  EXPECT_EQ(betti_splitting_sum(j, k, jk), i);
  EXPECT_TRUE(check_betti_splitting_numeric(i, j, k, jk));
}

// The first five generators of the running example, split alternately as
// A = {(0,5),(2,3),(6,1)}, B = {(1,4),(4,2)}: four cuts and a four-generator
// intersection, so beta_1 of the sum overshoots by three.
TEST(BettiSplittingSum, FourCutsOvershoot) {
  const BettiTable i = betti_table(Arrangement::tight(0, 1, Partition{4, 3, 2, 2, 1, 1}));
  const BettiTable j = betti_table(Arrangement::tight(0, 1, Partition{4, 4, 2, 2, 2, 2}));
  const BettiTable k = betti_table(Arrangement(1, 2, Partition{2, 2, 2}, {7, 5}));
  const BettiTable jk = betti_table(Arrangement(1, 2, Partition{3, 2, 2, 1, 1}, {7, 5}));
  const BettiTable sum = betti_splitting_sum(j, k, jk);
  EXPECT_FALSE(check_betti_splitting_numeric(i, j, k, jk));
  EXPECT_EQ(sum.total(0), i.total(0));
  EXPECT_EQ(sum.total(1) - i.total(1), 3);
}

TEST(ResolutionProperties, GeneratorAndSyzygyCounts) {
  sampling::Rng rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const Partition alpha = sampling::random_partition(rng, 10, 10);
    const CxVx r = cx_vx(alpha);
    ASSERT_EQ(r.generators.size(), r.syzygies.size() + 1);
    ASSERT_EQ(r.generators.size(), alpha.drops().size() + 2);
    // Each syzygy sits over at least two generators.
    for (Bidegree s : r.syzygies) {
      const auto below = std::count_if(r.generators.begin(), r.generators.end(),
                                       [&](Bidegree g) { return g.divides(s); });
      ASSERT_GE(below, 2);
    }
  }
}

TEST(ResolutionProperties, ClosedFormMatchesOracleOnSmallShapes) {
  sampling::Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const AcmConfig c = sampling::random_acm(rng, 5, 5, 9);
    const auto ideal = oracle::IdealPieces::vanishing(kField, c.to_grid());
    const Bidegree amb{static_cast<int>(c.rows()), static_cast<int>(c.cols())};
    ASSERT_EQ(oracle::oracle_betti_table(ideal, oracle::default_box(amb)), betti_table(attach_lines(c, 0, 0)))
        << c.alpha();
  }
}

}  // namespace
}  // namespace bisplit
