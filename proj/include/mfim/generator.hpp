#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mfim/itemset.hpp"
#include "mfim/txdb.hpp"

namespace mfim {

/// Synthetic corpus with a planted frequent itemset.
///
/// `planted_copies` rows hold exactly the planted itemset; every other
/// row draws each item independently with probability `noise_density`.
/// When `max_noise_size` is set, oversized noise rows lose random items
/// until they fit, which keeps the planted set the unique largest row.
struct GeneratorSpec {
  std::size_t n_transactions = 10;
  std::size_t universe_size = 20;
  std::size_t planted_itemset_size = 12;
  std::size_t planted_copies = 2;
  double noise_density = 0.3;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_noise_size;

  /// Throws ParamError on an inconsistent spec.
  void validate() const;
};

struct GeneratedCorpus {
  TransactionDatabase db;
  Itemset planted;
  std::vector<TxId> planted_rows;
};

/// Deterministic for a given spec: same spec and seed, same corpus.
GeneratedCorpus generate_corpus(const GeneratorSpec& spec);

}  // namespace mfim
