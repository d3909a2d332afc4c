#include "mfim/apriori.hpp"

#include <algorithm>

namespace mfim {
namespace {

bool shares_prefix(const Itemset& a, const Itemset& b, std::size_t len) {
  return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(len), b.begin());
}

}  // namespace

std::vector<SupportedItemset> AprioriResult::all_frequent() const {
  std::vector<SupportedItemset> out;
  for (const auto& level : levels) out.insert(out.end(), level.itemsets.begin(), level.itemsets.end());
  return out;
}

CandidateLevel apriori_join(const FrequentLevel& prev) {
  CandidateLevel out{prev.k + 1, {}};
  const auto& xs = prev.itemsets;
  if (prev.k == 0) return out;
  const std::size_t prefix = prev.k - 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!shares_prefix(xs[i].itemset, xs[j].itemset, prefix)) break;
      std::vector<ItemId> merged(xs[i].itemset.begin(), xs[i].itemset.end());
      merged.push_back(xs[j].itemset[prefix]);
      out.itemsets.push_back(Itemset::from_sorted(std::move(merged)));
    }
  }
  sort_canonical(out.itemsets);
  out.itemsets.erase(std::unique(out.itemsets.begin(), out.itemsets.end()), out.itemsets.end());
  return out;
}

CandidateLevel apriori_prune(const CandidateLevel& cands, const FrequentLevel& prev) {
  auto is_frequent = [&](const Itemset& x) {
    auto it = std::lower_bound(prev.itemsets.begin(), prev.itemsets.end(), x,
                               [](const SupportedItemset& s, const Itemset& v) { return s.itemset < v; });
    return it != prev.itemsets.end() && it->itemset == x;
  };
  CandidateLevel out{cands.k, {}};
  for (const auto& c : cands.itemsets) {
    bool keep = true;
    for (std::size_t i = 0; i < c.size() && keep; ++i) keep = is_frequent(c.without_position(i));
    if (keep) out.itemsets.push_back(c);
  }
  return out;
}

FrequentLevel apriori_count(const TransactionDatabase& db, const CandidateLevel& cands,
                            std::uint64_t min_support_count) {
  std::vector<ItemMask> masks;
  masks.reserve(cands.itemsets.size());
  for (const auto& c : cands.itemsets) masks.push_back(db.mask(c));

  std::vector<std::vector<TxId>> sources(cands.itemsets.size());
  for (TxId t = 0; t < db.size(); ++t) {
    if (db[t].items.size() < cands.k) continue;
    for (std::size_t c = 0; c < masks.size(); ++c) {
      if (db.row_contains(t, masks[c])) sources[c].push_back(t);
    }
  }

  FrequentLevel out{cands.k, {}};
  for (std::size_t c = 0; c < cands.itemsets.size(); ++c) {
    if (sources[c].size() >= min_support_count) {
      const auto n = sources[c].size();
      out.itemsets.push_back(SupportedItemset{cands.itemsets[c], n, std::move(sources[c])});
    }
  }
  sort_canonical(out.itemsets);
  return out;
}

AprioriResult apriori_mine(const TransactionDatabase& db, const MiningParams& params) {
  params.validate();
  AprioriResult result;

  CandidateLevel cands{1, {}};
  for (std::uint32_t i = 0; i < db.universe_size(); ++i) cands.itemsets.push_back(Itemset::of({i}));

  while (!cands.itemsets.empty()) {
    ++result.scan_count;
    result.candidates_counted += cands.itemsets.size();
    FrequentLevel level = apriori_count(db, cands, params.min_support_count);
    if (level.itemsets.empty()) break;
    cands = apriori_prune(apriori_join(level), level);
    result.levels.push_back(std::move(level));
  }
  return result;
}

}  // namespace mfim
