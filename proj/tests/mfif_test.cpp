#include "mfim/mfif.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mfim/errors.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

namespace mfim {
namespace {

using testing::paper_db;

MiningParams with_support(std::uint64_t n) {
  MiningParams p;
  p.min_support_count = n;
  return p;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(KMinus1SubsetsTest, DropsEachMemberInOrder) {
  EXPECT_EQ(k_minus_1_subsets(Itemset::of({0, 1, 2})),
            (std::vector<Itemset>{Itemset::of({1, 2}), Itemset::of({0, 2}), Itemset::of({0, 1})}));
  EXPECT_EQ(k_minus_1_subsets(Itemset::of({4})), (std::vector<Itemset>{Itemset()}));
  EXPECT_EQ(k_minus_1_subsets(Itemset::of({1, 6})),
            (std::vector<Itemset>{Itemset::of({6}), Itemset::of({1})}));
}

TEST(KMinus1SubsetsTest, EmptyInputIsAnError) {
  try {
    k_minus_1_subsets(Itemset());
    FAIL();
  } catch (const ParamError& e) {
    EXPECT_STREQ(e.what(), "cannot peel empty itemset");
  }
}

// Walks the worked example one level at a time.
TEST(MfifStepTest, WorkedExampleLevels) {
  const auto db = paper_db();
  LevelState state = mfif_seed(db);
  EXPECT_EQ(state.level, 3u);
  ASSERT_EQ(state.pool.size(), 1u);
  EXPECT_EQ(state.pool[0], (Candidate{Itemset::of({0, 1, 2}), 2}));
  EXPECT_EQ(mfif_count(state),
            (std::vector<std::pair<Itemset, std::uint64_t>>{{Itemset::of({0, 1, 2}), 1}}));

  EXPECT_EQ(mfif_descend(db, state, kDefaultPoolCap), 3u);
  EXPECT_EQ(state.level, 2u);
  // The combined table: three subsets of T3 plus T1, T2 and T4.
  std::multiset<Itemset> rows;
  for (const auto& c : state.pool) rows.insert(c.itemset);
  EXPECT_EQ(rows, (std::multiset<Itemset>{Itemset::of({1, 2}), Itemset::of({0, 2}), Itemset::of({0, 1}),
                                          Itemset::of({0, 1}), Itemset::of({0, 2}), Itemset::of({0, 2})}));
  EXPECT_EQ(mfif_count(state), (std::vector<std::pair<Itemset, std::uint64_t>>{
                                   {Itemset::of({0, 1}), 2}, {Itemset::of({0, 2}), 3}, {Itemset::of({1, 2}), 1}}));
  EXPECT_EQ(state.pending, (std::vector<TxId>{4}));
}

TEST(MfifMineTest, WorkedExample) {
  const auto r = mfif_mine(paper_db(), with_support(2));
  EXPECT_EQ(r.level, 2u);
  ASSERT_EQ(r.itemsets.size(), 2u);
  EXPECT_EQ(r.itemsets[0].itemset, Itemset::of({0, 1}));
  EXPECT_EQ(r.itemsets[0].support, 2u);
  EXPECT_EQ(r.itemsets[0].sources, (std::vector<std::uint32_t>{0, 2}));
  EXPECT_EQ(r.itemsets[1].itemset, Itemset::of({0, 2}));
  EXPECT_EQ(r.itemsets[1].support, 3u);
  EXPECT_EQ(r.itemsets[1].sources, (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_EQ(r.levels_descended, 2u);
  EXPECT_EQ(r.subset_expansions, 3u);
  EXPECT_EQ(r.counting_passes, 2u);
}

TEST(MfifMineTest, PlantedTwelveItemsetFoundAtFirstLevel) {
  const auto db = testing::fig3_db();
  MiningParams p;
  p.min_support_count = MiningParams::parse_min_support("20%", db.size());
  ASSERT_EQ(p.min_support_count, 2u);
  const auto r = mfif_mine(db, p);
  EXPECT_EQ(r.level, 12u);
  ASSERT_EQ(r.itemsets.size(), 1u);
  EXPECT_EQ(r.itemsets[0].itemset.labels(), "I2 I3 I4 I5 I6 I12 I13 I14 I15 I16 I17 I20");
  EXPECT_EQ(r.itemsets[0].support, 2u);
  EXPECT_EQ(r.levels_descended, 1u);
  EXPECT_EQ(r.subset_expansions, 0u);
}

TEST(MfifMineTest, UnreachableThresholdGivesEmptyResult) {
  const auto db = paper_db();
  const auto r = mfif_mine(db, with_support(db.size() + 1));
  EXPECT_EQ(r.level, 0u);
  EXPECT_TRUE(r.itemsets.empty());
  EXPECT_EQ(r.levels_descended, 3u);
}

TEST(MfifMineTest, AllEmptyTransactions) {
  const auto r = mfif_mine(parse_matrix("0 0\n0 0"), with_support(1));
  EXPECT_EQ(r.level, 0u);
  EXPECT_TRUE(r.itemsets.empty());
  EXPECT_EQ(r.levels_descended, 0u);
}

TEST(MfifMineTest, PoolCapAbortsNamingTheLevel) {
  // One 10-item row: level 9 needs 10 candidates.
  const auto db = parse_matrix("1 1 1 1 1 1 1 1 1 1\n");
  MiningParams p = with_support(2);
  p.pool_cap = 5;
  try {
    mfif_mine(db, p);
    FAIL();
  } catch (const ResourceLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("level 9"), std::string::npos) << e.what();
  }
  EXPECT_THROW(mfif_mine_all_maximal(db, p), ResourceLimitError);
}

TEST(MfifMineTest, InvalidParams) {
  EXPECT_THROW(mfif_mine(paper_db(), with_support(0)), ParamError);
}

TEST(MfifMineAllMaximalTest, Examples) {
  const auto db = paper_db();
  const auto two = mfif_mine_all_maximal(db, with_support(2));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].itemset, Itemset::of({0, 1}));
  EXPECT_EQ(two[0].support, 2u);
  EXPECT_EQ(two[1].itemset, Itemset::of({0, 2}));
  EXPECT_EQ(two[1].support, 3u);

  const auto four = mfif_mine_all_maximal(db, with_support(4));
  ASSERT_EQ(four.size(), 1u);
  EXPECT_EQ(four[0].itemset, Itemset::of({0}));
  EXPECT_EQ(four[0].support, 5u);

  EXPECT_TRUE(mfif_mine_all_maximal(db, with_support(6)).empty());
}

TEST(MfifMineAllMaximalTest, ReportsLowerLevelMaximalSets) {
  // {I1,I2,I3} twice and {I4} three times: two maximal sets at different levels.
  const auto db = parse_matrix("1 1 1 0\n1 1 1 0\n0 0 0 1\n0 0 0 1\n0 0 0 1\n");
  const auto r = mfif_mine_all_maximal(db, with_support(2));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].itemset, Itemset::of({3}));
  EXPECT_EQ(r[0].support, 3u);
  EXPECT_EQ(r[1].itemset, Itemset::of({0, 1, 2}));
}

// Per-level invariants on random databases: pool entries have the level's
// cardinality and are unique per source, the count of an itemset equals
// its support once every transaction of size >= level is absorbed, and
// the pool never exceeds the sum of C(|t|, level).
TEST(MfifPropertyTest, PoolInvariantsAtEveryLevel) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 300; ++round) {
    const auto db = testing::random_db(rng, 8, 20);
    LevelState state = mfif_seed(db);
    while (state.level >= 1) {
      std::set<std::pair<Itemset, TxId>> seen;
      std::uint64_t bound = 0;
      for (const auto& t : db.transactions()) bound += binomial(t.items.size(), state.level);
      EXPECT_LE(state.pool.size(), bound);
      for (const auto& c : state.pool) {
        EXPECT_EQ(c.itemset.size(), state.level);
        EXPECT_TRUE(c.itemset.is_subset_of(db[c.source_tx].items));
        EXPECT_TRUE(seen.emplace(c.itemset, c.source_tx).second);
      }
      for (const auto& [x, count] : mfif_count(state)) {
        std::vector<std::uint32_t> items;
        for (auto m : x) items.push_back(m.index);
        EXPECT_EQ(count, testing::naive_support(db, items)) << x;
      }
      if (state.level == 1) break;
      mfif_descend(db, state, kDefaultPoolCap);
    }
  }
}

TEST(MfifPropertyTest, LevelBoundAndDownwardClosure) {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 300; ++round) {
    const auto db = testing::random_db(rng, 8, 20);
    const auto sizes = transaction_sizes(db);
    const std::size_t max_size = *std::max_element(sizes.begin(), sizes.end());
    for (std::uint64_t s = 1; s <= db.size(); ++s) {
      const auto r = mfif_mine(db, with_support(s));
      EXPECT_LE(r.levels_descended, max_size - r.level + 1);
      EXPECT_EQ(r.level == 0, r.itemsets.empty());
      for (const auto& x : r.itemsets) {
        EXPECT_EQ(x.itemset.size(), r.level);
        EXPECT_GE(x.support, s);
        if (x.itemset.size() < 2) continue;
        for (const auto& sub : k_minus_1_subsets(x.itemset)) EXPECT_GE(support_count(db, sub), s);
      }
    }
  }
}

}  // namespace
}  // namespace mfim
