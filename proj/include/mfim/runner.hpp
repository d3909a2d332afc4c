#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfim/itemset.hpp"
#include "mfim/params.hpp"
#include "mfim/txdb.hpp"

namespace mfim {

enum class Algorithm { kMfif, kMfifAll, kApriori, kBrute };

/// "mfif" | "mfif-all" | "apriori" | "brute"; throws ParamError otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);

/// Uniform view over the four miners.
struct MiningOutcome {
  Algorithm algorithm = Algorithm::kMfif;
  /// Cardinality of the largest reported itemset.
  std::size_t level = 0;
  /// Reported itemsets: the top level for mfif, apriori and brute; the
  /// whole maximal family for mfif-all. Canonically sorted.
  std::vector<SupportedItemset> itemsets;
  /// Frequent itemsets of two or more items, the input to rule generation.
  std::vector<SupportedItemset> rule_sources;
  /// Named instrumentation counters, in a fixed order per algorithm.
  std::vector<std::pair<std::string, std::uint64_t>> counters;

  /// Reported itemsets whose cardinality equals `level`.
  std::size_t top_level_count() const;
  /// levels_descended for mfif, scan_count for apriori, 0 otherwise.
  std::uint64_t scans_or_levels() const;
};

/// Runs one miner. `with_rule_sources` additionally collects the
/// frequent itemsets that rule generation needs.
MiningOutcome run_algorithm(const TransactionDatabase& db, Algorithm algorithm,
                            const MiningParams& params, bool with_rule_sources = false);

}  // namespace mfim
