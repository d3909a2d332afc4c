#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace mfim {

/// 0-based item index. Human-facing labels are 1-based ("I1", "I2", ...).
struct ItemId {
  std::uint32_t index = 0;

  constexpr ItemId() = default;
  constexpr explicit ItemId(std::uint32_t i) : index(i) {}

  std::string label() const { return "I" + std::to_string(index + 1); }

  friend constexpr auto operator<=>(ItemId, ItemId) = default;
};

/// Sorted, duplicate-free set of items.
///
/// The sorted member list is the canonical form, so set equality is
/// representation equality. Ordering is by cardinality first, then
/// lexicographic on members; every sorted output in the library uses it.
class Itemset {
 public:
  Itemset() = default;

  /// Sorts `items`; throws FormatError on duplicates.
  explicit Itemset(std::vector<ItemId> items);

  /// Convenience for 0-based indices, e.g. `Itemset::of({0, 2})`.
  static Itemset of(std::initializer_list<std::uint32_t> indices);

  /// Takes members already in strictly ascending order.
  static Itemset from_sorted(std::vector<ItemId> items);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const ItemId> members() const { return members_; }
  ItemId operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(ItemId item) const;
  bool is_subset_of(const Itemset& other) const;

  /// Copy with the member at position `pos` removed.
  Itemset without_position(std::size_t pos) const;

  Itemset union_with(const Itemset& other) const;
  Itemset minus(const Itemset& other) const;

  /// "I1 I3"; the empty set renders as "{}".
  std::string labels() const;

  /// 0/1 flags over `universe_size` items, space separated.
  std::string binary_row(std::size_t universe_size) const;

  /// 1-based item numbers, as used by the JSON and item-list formats.
  std::vector<std::uint32_t> one_based() const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend std::strong_ordering operator<=>(const Itemset& a, const Itemset& b);

 private:
  std::vector<ItemId> members_;
};

std::ostream& operator<<(std::ostream& os, const Itemset& x);

/// Itemset together with its support count and the ids of the
/// transactions containing it. `support == sources.size()`.
struct SupportedItemset {
  Itemset itemset;
  std::uint64_t support = 0;
  std::vector<std::uint32_t> sources;

  friend bool operator==(const SupportedItemset&, const SupportedItemset&) = default;
};

/// Sorts by itemset in canonical order.
void sort_canonical(std::vector<SupportedItemset>& xs);
void sort_canonical(std::vector<Itemset>& xs);

/// True when no member is a subset of another member.
bool is_antichain(std::span<const Itemset> family);

}  // namespace mfim
