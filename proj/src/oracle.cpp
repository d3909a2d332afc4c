#include "mfim/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "mfim/errors.hpp"

namespace mfim {
namespace {

Itemset from_mask(std::uint32_t mask) {
  std::vector<ItemId> items;
  for (std::uint32_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1U) items.emplace_back(i);
  }
  return Itemset::from_sorted(std::move(items));
}

struct Enumeration {
  std::vector<std::uint32_t> rows;
  // counts[x] = number of rows that are supersets of x.
  std::vector<std::uint64_t> counts;
};

Enumeration enumerate(const TransactionDatabase& db) {
  const std::size_t u = db.universe_size();
  if (u > kOracleMaxUniverse) {
    throw GuardError("brute-force oracle limited to " + std::to_string(kOracleMaxUniverse) +
                     " items, database has " + std::to_string(u));
  }
  Enumeration e;
  e.counts.assign(std::size_t{1} << u, 0);
  for (const auto& t : db.transactions()) {
    std::uint32_t row = 0;
    for (ItemId item : t.items) row |= std::uint32_t{1} << item.index;
    e.rows.push_back(row);
    ++e.counts[row];
  }
  // Superset sums: afterwards counts[x] = sum over rows r with x ⊆ r.
  for (std::size_t bit = 0; bit < u; ++bit) {
    for (std::size_t x = 0; x < e.counts.size(); ++x) {
      if (!(x & (std::size_t{1} << bit))) e.counts[x] += e.counts[x | (std::size_t{1} << bit)];
    }
  }
  return e;
}

SupportedItemset materialize(const Enumeration& e, std::uint32_t x) {
  SupportedItemset s{from_mask(x), e.counts[x], {}};
  for (std::size_t t = 0; t < e.rows.size(); ++t) {
    if ((e.rows[t] & x) == x) s.sources.push_back(static_cast<std::uint32_t>(t));
  }
  return s;
}

}  // namespace

std::vector<SupportedItemset> brute_force_frequent(const TransactionDatabase& db,
                                                   const MiningParams& params) {
  params.validate();
  const Enumeration e = enumerate(db);
  std::vector<SupportedItemset> out;
  for (std::uint32_t x = 1; x < e.counts.size(); ++x) {
    if (e.counts[x] >= params.min_support_count) out.push_back(materialize(e, x));
  }
  sort_canonical(out);
  return out;
}

std::vector<SupportedItemset> brute_force_maximal(const TransactionDatabase& db,
                                                  const MiningParams& params) {
  params.validate();
  const Enumeration e = enumerate(db);
  const std::size_t u = db.universe_size();
  auto frequent = [&](std::uint32_t x) { return e.counts[x] >= params.min_support_count; };

  // A frequent set with a frequent proper superset also has a frequent
  // one-item extension (any superset's subsets are frequent), so checking
  // single-item extensions decides maximality.
  std::vector<SupportedItemset> out;
  for (std::uint32_t x = 1; x < e.counts.size(); ++x) {
    if (!frequent(x)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < u && maximal; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (!(x & bit) && frequent(x | bit)) maximal = false;
    }
    if (maximal) out.push_back(materialize(e, x));
  }
  sort_canonical(out);
  return out;
}

}  // namespace mfim
