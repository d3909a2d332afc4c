#pragma once

#include <vector>

#include "mfim/itemset.hpp"
#include "mfim/txdb.hpp"

namespace mfim::testing {

// Test-only reference that follows the definitions word for word: list
// every non-empty subset of the universe, count containing transactions
// with set inclusion, and compare every pair for maximality. Shares no
// code with the library's counting paths.

struct NaiveItemset {
  std::vector<std::uint32_t> items;
  std::uint64_t support = 0;

  friend bool operator==(const NaiveItemset&, const NaiveItemset&) = default;
};

std::uint64_t naive_support(const TransactionDatabase& db, const std::vector<std::uint32_t>& items);

/// Sorted by size, then lexicographically.
std::vector<NaiveItemset> naive_frequent(const TransactionDatabase& db, std::uint64_t min_support);
std::vector<NaiveItemset> naive_maximal(const TransactionDatabase& db, std::uint64_t min_support);

/// Converts library output for comparison.
std::vector<NaiveItemset> to_naive(const std::vector<SupportedItemset>& xs);

}  // namespace mfim::testing
