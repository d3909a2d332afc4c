#pragma once

#include <cstdint>
#include <vector>

#include "mfim/itemset.hpp"
#include "mfim/params.hpp"
#include "mfim/txdb.hpp"

namespace mfim {

/// Frequent k-itemsets, canonically sorted.
struct FrequentLevel {
  std::size_t k = 0;
  std::vector<SupportedItemset> itemsets;
};

/// Candidate k-itemsets; a superset of the frequent ones.
struct CandidateLevel {
  std::size_t k = 0;
  std::vector<Itemset> itemsets;
};

struct AprioriResult {
  /// Non-empty frequent levels L(1), L(2), ... in order.
  std::vector<FrequentLevel> levels;
  /// Full database passes: one per candidate level counted, including
  /// a final level that turns out to have no frequent member.
  std::size_t scan_count = 0;
  std::uint64_t candidates_counted = 0;

  std::size_t max_level() const { return levels.empty() ? 0 : levels.back().k; }
  std::vector<SupportedItemset> all_frequent() const;
};

/// Prefix join: merges every two members sharing their first k-1 items.
CandidateLevel apriori_join(const FrequentLevel& prev);

/// Drops candidates that have a k-subset missing from `prev`.
CandidateLevel apriori_prune(const CandidateLevel& cands, const FrequentLevel& prev);

/// Counts every candidate in a single pass over the database and keeps
/// those meeting the threshold.
FrequentLevel apriori_count(const TransactionDatabase& db, const CandidateLevel& cands,
                            std::uint64_t min_support_count);

/// Level-wise mining until a level has no frequent member.
AprioriResult apriori_mine(const TransactionDatabase& db, const MiningParams& params);

}  // namespace mfim
