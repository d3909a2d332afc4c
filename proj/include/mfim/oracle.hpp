#pragma once

#include <vector>

#include "mfim/itemset.hpp"
#include "mfim/params.hpp"
#include "mfim/txdb.hpp"

namespace mfim {

/// Largest universe the brute-force enumeration accepts.
inline constexpr std::size_t kOracleMaxUniverse = 24;

/// Enumerates every non-empty itemset of the universe and keeps those
/// meeting the threshold. Exponential; throws GuardError above
/// kOracleMaxUniverse items. Sorted by cardinality, then canonically.
std::vector<SupportedItemset> brute_force_frequent(const TransactionDatabase& db,
                                                   const MiningParams& params);

/// Members of brute_force_frequent with no frequent proper superset.
std::vector<SupportedItemset> brute_force_maximal(const TransactionDatabase& db,
                                                  const MiningParams& params);

}  // namespace mfim
