#include "mfim/params.hpp"

#include <gtest/gtest.h>

#include "mfim/errors.hpp"

namespace mfim {
namespace {

TEST(ParamsTest, PercentUsesCeilingWithFloorOfOne) {
  EXPECT_EQ(MiningParams::parse_min_support("20%", 10), 2u);
  EXPECT_EQ(MiningParams::parse_min_support("40%", 5), 2u);
  EXPECT_EQ(MiningParams::parse_min_support("60%", 5), 3u);
  EXPECT_EQ(MiningParams::parse_min_support("41%", 5), 3u);
  EXPECT_EQ(MiningParams::parse_min_support("0.5%", 10), 1u);
  EXPECT_EQ(MiningParams::parse_min_support("100%", 7), 7u);
  EXPECT_EQ(MiningParams::parse_min_support("3", 7), 3u);
}

TEST(ParamsTest, RejectsBadThresholds) {
  EXPECT_THROW(MiningParams::parse_min_support("0", 5), ParamError);
  EXPECT_THROW(MiningParams::parse_min_support("0%", 5), ParamError);
  EXPECT_THROW(MiningParams::parse_min_support("101%", 5), ParamError);
  EXPECT_THROW(MiningParams::parse_min_support("-2", 5), ParamError);
  EXPECT_THROW(MiningParams::parse_min_support("abc", 5), ParamError);
  MiningParams p;
  p.min_support_count = 0;
  EXPECT_THROW(p.validate(), ParamError);
  p.min_support_count = 1;
  p.min_confidence = Ratio{11, 10};
  EXPECT_THROW(p.validate(), ParamError);
}

TEST(RatioTest, ParsesAndComparesExactly) {
  EXPECT_EQ(Ratio::parse_decimal("0.7"), (Ratio{7, 10}));
  EXPECT_EQ(Ratio::parse_decimal(".5"), (Ratio{1, 2}));
  EXPECT_EQ(Ratio::parse_decimal("1"), (Ratio{3, 3}));
  EXPECT_TRUE((Ratio{3, 5}) < Ratio::parse_decimal("0.7"));
  EXPECT_TRUE((Ratio{3, 5}) >= Ratio::parse_decimal("0.6"));
  EXPECT_THROW(Ratio::parse_decimal("."), ParamError);
  EXPECT_THROW(Ratio::parse_decimal("0.1234567891"), ParamError);
}

TEST(RatioTest, DecimalRendering) {
  EXPECT_EQ((Ratio{3, 3}).to_decimal(), "1.000000");
  EXPECT_EQ((Ratio{3, 5}).to_decimal(), "0.600000");
  EXPECT_EQ((Ratio{2, 3}).to_decimal(), "0.666667");
  EXPECT_EQ((Ratio{1, 3}).to_decimal(2), "0.33");
}

}  // namespace
}  // namespace mfim
