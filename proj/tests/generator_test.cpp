#include "mfim/generator.hpp"

#include <gtest/gtest.h>

#include "mfim/errors.hpp"

namespace mfim {
namespace {

TEST(GeneratorTest, PlantedRowsAreIdentical) {
  GeneratorSpec spec{10, 20, 12, 2, 0.3, 7, std::nullopt};
  const auto corpus = generate_corpus(spec);
  const auto reread = parse_matrix(to_matrix_text(corpus.db));
  EXPECT_EQ(reread.size(), 10u);
  EXPECT_EQ(reread.universe_size(), 20u);
  ASSERT_EQ(corpus.planted_rows.size(), 2u);
  EXPECT_EQ(corpus.planted.size(), 12u);
  for (TxId t : corpus.planted_rows) EXPECT_EQ(reread[t].items, corpus.planted);
}

TEST(GeneratorTest, DeterministicPerSeed) {
  GeneratorSpec spec{50, 20, 12, 2, 0.3, 7, std::nullopt};
  EXPECT_EQ(to_matrix_text(generate_corpus(spec).db), to_matrix_text(generate_corpus(spec).db));
  GeneratorSpec other = spec;
  other.seed = 8;
  EXPECT_NE(to_matrix_text(generate_corpus(spec).db), to_matrix_text(generate_corpus(other).db));
}

TEST(GeneratorTest, PureNoiseWhenNothingPlanted) {
  GeneratorSpec spec{20, 10, 0, 3, 0.5, 1, std::nullopt};
  const auto corpus = generate_corpus(spec);
  EXPECT_TRUE(corpus.planted.empty());
  EXPECT_TRUE(corpus.planted_rows.empty());
  EXPECT_EQ(corpus.db.size(), 20u);
}

TEST(GeneratorTest, NoiseCapKeepsRowsSmall) {
  GeneratorSpec spec{200, 20, 12, 2, 0.9, 3, 11};
  const auto corpus = generate_corpus(spec);
  for (const auto& t : corpus.db.transactions()) {
    const bool planted = std::find(corpus.planted_rows.begin(), corpus.planted_rows.end(), t.id) !=
                         corpus.planted_rows.end();
    if (!planted) EXPECT_LE(t.items.size(), 11u);
  }
}

TEST(GeneratorTest, InvalidSpecs) {
  EXPECT_THROW(generate_corpus({10, 20, 12, 11, 0.3, 1, std::nullopt}), ParamError);
  EXPECT_THROW(generate_corpus({10, 20, 21, 2, 0.3, 1, std::nullopt}), ParamError);
  EXPECT_THROW(generate_corpus({10, 20, 12, 2, 1.5, 1, std::nullopt}), ParamError);
  EXPECT_THROW(generate_corpus({0, 20, 12, 0, 0.3, 1, std::nullopt}), ParamError);
}

}  // namespace
}  // namespace mfim
