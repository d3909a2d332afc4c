#include "mfim/itemset.hpp"

#include <gtest/gtest.h>

#include "mfim/errors.hpp"

namespace mfim {
namespace {

TEST(ItemsetTest, CanonicalFormIsSortedMembers) {
  EXPECT_EQ(Itemset::of({2, 0, 1}), Itemset::of({0, 1, 2}));
  EXPECT_EQ(Itemset::of({2, 0}).labels(), "I1 I3");
  EXPECT_THROW(Itemset::of({1, 1}), FormatError);
}

TEST(ItemsetTest, OrdersByCardinalityThenMembers) {
  EXPECT_LT(Itemset::of({5}), Itemset::of({0, 1}));
  EXPECT_LT(Itemset::of({0, 1}), Itemset::of({0, 2}));
  EXPECT_LT(Itemset(), Itemset::of({0}));
}

TEST(ItemsetTest, SubsetAndSetAlgebra) {
  const auto a = Itemset::of({0, 2});
  const auto b = Itemset::of({0, 1, 2});
  EXPECT_TRUE(a.is_subset_of(b));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE(Itemset().is_subset_of(a));
  EXPECT_EQ(b.minus(a), Itemset::of({1}));
  EXPECT_EQ(a.union_with(Itemset::of({1})), b);
  EXPECT_EQ(b.without_position(1), a);
}

TEST(ItemsetTest, RendersRowsAndLabels) {
  const auto x = Itemset::of({0, 2});
  EXPECT_EQ(x.binary_row(4), "1 0 1 0");
  EXPECT_EQ(x.one_based(), (std::vector<std::uint32_t>{1, 3}));
  EXPECT_EQ(Itemset().labels(), "{}");
  EXPECT_EQ(ItemId(19).label(), "I20");
}

TEST(ItemsetTest, AntichainDetection) {
  std::vector<Itemset> family{Itemset::of({0, 1}), Itemset::of({0, 2})};
  EXPECT_TRUE(is_antichain(family));
  family.push_back(Itemset::of({2}));
  EXPECT_FALSE(is_antichain(family));
}

}  // namespace
}  // namespace mfim
