#include "mfim/itemset.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "mfim/errors.hpp"

namespace mfim {

Itemset::Itemset(std::vector<ItemId> items) : members_(std::move(items)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw FormatError("itemset contains a duplicate item");
  }
}

Itemset Itemset::of(std::initializer_list<std::uint32_t> indices) {
  std::vector<ItemId> items;
  items.reserve(indices.size());
  for (auto i : indices) items.emplace_back(i);
  return Itemset(std::move(items));
}

Itemset Itemset::from_sorted(std::vector<ItemId> items) {
  assert(std::adjacent_find(items.begin(), items.end(),
                            [](ItemId a, ItemId b) { return a >= b; }) == items.end());
  Itemset x;
  x.members_ = std::move(items);
  return x;
}

bool Itemset::contains(ItemId item) const {
  return std::binary_search(members_.begin(), members_.end(), item);
}

bool Itemset::is_subset_of(const Itemset& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

Itemset Itemset::without_position(std::size_t pos) const {
  assert(pos < members_.size());
  std::vector<ItemId> out;
  out.reserve(members_.size() - 1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i != pos) out.push_back(members_[i]);
  }
  return from_sorted(std::move(out));
}

Itemset Itemset::union_with(const Itemset& other) const {
  std::vector<ItemId> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

Itemset Itemset::minus(const Itemset& other) const {
  std::vector<ItemId> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::string Itemset::labels() const {
  if (members_.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ' ';
    s += members_[i].label();
  }
  return s;
}

std::string Itemset::binary_row(std::size_t universe_size) const {
  std::string s;
  s.reserve(universe_size * 2);
  auto it = members_.begin();
  for (std::size_t j = 0; j < universe_size; ++j) {
    if (j) s += ' ';
    if (it != members_.end() && it->index == j) {
      s += '1';
      ++it;
    } else {
      s += '0';
    }
  }
  return s;
}

std::vector<std::uint32_t> Itemset::one_based() const {
  std::vector<std::uint32_t> out;
  out.reserve(members_.size());
  for (auto m : members_) out.push_back(m.index + 1);
  return out;
}

std::strong_ordering operator<=>(const Itemset& a, const Itemset& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

std::ostream& operator<<(std::ostream& os, const Itemset& x) {
  return os << '{' << (x.empty() ? std::string() : x.labels()) << '}';
}

void sort_canonical(std::vector<SupportedItemset>& xs) {
  std::sort(xs.begin(), xs.end(),
            [](const SupportedItemset& a, const SupportedItemset& b) { return a.itemset < b.itemset; });
}

void sort_canonical(std::vector<Itemset>& xs) { std::sort(xs.begin(), xs.end()); }

bool is_antichain(std::span<const Itemset> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && family[i].is_subset_of(family[j])) return false;
    }
  }
  return true;
}

}  // namespace mfim
