#pragma once

#include <cstdint>
#include <vector>

#include "mfim/itemset.hpp"
#include "mfim/params.hpp"
#include "mfim/txdb.hpp"

namespace mfim {

/// One row of the working pool: an itemset and the transaction it was
/// peeled from. `itemset` is always a subset of that transaction.
struct Candidate {
  Itemset itemset;
  TxId source_tx = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Working state of the top-down search at a single level.
///
/// Every pool entry has cardinality `level`, and the pool holds each
/// (itemset, source_tx) pair at most once. Entries sharing a source are
/// contiguous. `pending` lists transactions not yet absorbed, largest first.
struct LevelState {
  std::size_t level = 0;
  std::vector<Candidate> pool;
  std::vector<TxId> pending;
};

struct MfifResult {
  /// Cardinality of the answer; 0 when nothing is frequent.
  std::size_t level = 0;
  /// Every `level`-itemset meeting the threshold, canonically sorted.
  std::vector<SupportedItemset> itemsets;
  /// Level iterations executed (count, test, and possibly descend).
  std::size_t levels_descended = 0;
  /// (k-1)-subsets produced by peeling, before deduplication.
  std::uint64_t subset_expansions = 0;
  /// Passes over the full pool that tally per-itemset counts.
  std::size_t counting_passes = 0;
  /// Largest pool held at any level.
  std::size_t peak_pool_size = 0;
};

/// All subsets obtained by dropping one member; removing the i-th
/// smallest member gives the i-th output. Throws ParamError on empty input.
std::vector<Itemset> k_minus_1_subsets(const Itemset& x);

/// Seeds the search: level = largest transaction size, pool = every
/// transaction of that size.
LevelState mfif_seed(const TransactionDatabase& db);

/// Number of distinct source transactions per distinct pool itemset,
/// in canonical itemset order.
std::vector<std::pair<Itemset, std::uint64_t>> mfif_count(const LevelState& state);

/// Peels every pool candidate into its (level-1)-subsets, absorbs the
/// transactions whose size equals the new level and deduplicates.
/// Returns the number of subsets generated. Throws ResourceLimitError
/// when the pool exceeds `pool_cap`.
std::uint64_t mfif_descend(const TransactionDatabase& db, LevelState& state, std::size_t pool_cap);

/// Top-down search for the largest frequent itemsets.
///
/// Starts at the largest transaction size and, while no pool itemset is
/// backed by at least `min_support_count` distinct transactions, peels
/// the pool one level down and absorbs the transactions of that size.
/// Reports every itemset at the first level that succeeds, with exact
/// support and sources.
MfifResult mfif_mine(const TransactionDatabase& db, const MiningParams& params);

/// Continues the descent past the first successful level and collects the
/// complete maximal frequent family. Candidates contained in an already
/// reported itemset are dropped from the pool. Canonically sorted.
std::vector<SupportedItemset> mfif_mine_all_maximal(const TransactionDatabase& db,
                                                    const MiningParams& params);

}  // namespace mfim
