#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mfim/itemset.hpp"

namespace mfim {

using TxId = std::uint32_t;

struct Transaction {
  TxId id = 0;
  Itemset items;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// Word-packed item flags, used for containment tests against the
/// database rows. Obtained from TransactionDatabase::mask.
using ItemMask = std::vector<std::uint64_t>;

/// Immutable list of transactions over a fixed item universe.
///
/// Alongside the canonical itemsets, every row is kept as a packed bit
/// row so that subset containment is a handful of word operations. Both
/// mining engines count support through this same primitive.
class TransactionDatabase {
 public:
  /// Throws RangeError if any item lies outside the universe.
  TransactionDatabase(std::size_t universe_size, std::vector<Itemset> rows);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const { return transactions_.size(); }
  std::span<const Transaction> transactions() const { return transactions_; }
  const Transaction& operator[](TxId id) const { return transactions_[id]; }

  /// Throws RangeError for out-of-universe members.
  ItemMask mask(const Itemset& x) const;

  bool row_contains(TxId id, std::span<const std::uint64_t> mask) const {
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(id) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      if ((row[w] & mask[w]) != mask[w]) return false;
    }
    return true;
  }

  friend bool operator==(const TransactionDatabase& a, const TransactionDatabase& b) {
    return a.universe_size_ == b.universe_size_ && a.transactions_ == b.transactions_;
  }

 private:
  std::size_t universe_size_;
  std::size_t words_;
  std::vector<Transaction> transactions_;
  std::vector<std::uint64_t> bits_;
};

/// Dense 0/1 matrix: one transaction per line, whitespace separated
/// tokens "0" or "1", blank lines ignored.
TransactionDatabase parse_matrix(std::istream& in);
TransactionDatabase parse_matrix(std::string_view text);

/// Sparse form: each line lists 1-based item numbers; a blank line is an
/// empty transaction. A final newline terminates the last line rather
/// than starting another one.
TransactionDatabase parse_item_lists(std::istream& in, std::size_t universe_size);
TransactionDatabase parse_item_lists(std::string_view text, std::size_t universe_size);

std::string to_matrix_text(const TransactionDatabase& db);
std::string to_item_lists_text(const TransactionDatabase& db);

/// Exact support with source transaction ids. The empty itemset is
/// contained in every transaction.
SupportedItemset support(const TransactionDatabase& db, const Itemset& x);

/// Support count only; same semantics as support().
std::uint64_t support_count(const TransactionDatabase& db, const Itemset& x);

/// Number of items in each transaction, in id order.
std::vector<std::size_t> transaction_sizes(const TransactionDatabase& db);

}  // namespace mfim
