#include "mfim/mfif.hpp"

#include <algorithm>
#include <numeric>

#include "mfim/errors.hpp"

namespace mfim {
namespace {

struct PoolGroup {
  Itemset itemset;
  std::vector<TxId> sources;
};

// Groups the pool by itemset in canonical order. The pool holds each
// (itemset, source) pair once, so the group size is the number of
// distinct supporting transactions seen so far.
std::vector<PoolGroup> group_pool(const std::vector<Candidate>& pool) {
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (auto c = pool[a].itemset <=> pool[b].itemset; c != 0) return c < 0;
    return pool[a].source_tx < pool[b].source_tx;
  });
  std::vector<PoolGroup> groups;
  for (std::size_t i : order) {
    if (groups.empty() || groups.back().itemset != pool[i].itemset) {
      groups.push_back(PoolGroup{pool[i].itemset, {}});
    }
    groups.back().sources.push_back(pool[i].source_tx);
  }
  return groups;
}

void check_cap(std::size_t pool_size, std::size_t cap, std::size_t level) {
  if (pool_size > cap) {
    throw ResourceLimitError("candidate pool exceeded cap of " + std::to_string(cap) +
                             " at level " + std::to_string(level));
  }
}

}  // namespace

std::vector<Itemset> k_minus_1_subsets(const Itemset& x) {
  if (x.empty()) throw ParamError("cannot peel empty itemset");
  std::vector<Itemset> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x.without_position(i));
  return out;
}

LevelState mfif_seed(const TransactionDatabase& db) {
  LevelState state;
  for (const auto& t : db.transactions()) state.level = std::max(state.level, t.items.size());
  for (const auto& t : db.transactions()) {
    if (t.items.size() == state.level) {
      state.pool.push_back(Candidate{t.items, t.id});
    } else {
      state.pending.push_back(t.id);
    }
  }
  std::stable_sort(state.pending.begin(), state.pending.end(), [&](TxId a, TxId b) {
    return db[a].items.size() > db[b].items.size();
  });
  return state;
}

std::vector<std::pair<Itemset, std::uint64_t>> mfif_count(const LevelState& state) {
  std::vector<std::pair<Itemset, std::uint64_t>> counts;
  for (auto& g : group_pool(state.pool)) counts.emplace_back(std::move(g.itemset), g.sources.size());
  return counts;
}

std::uint64_t mfif_descend(const TransactionDatabase& db, LevelState& state, std::size_t pool_cap) {
  if (state.level < 2) throw ParamError("cannot descend below level 1");
  const std::size_t next_level = state.level - 1;
  std::uint64_t generated = 0;

  // The pool is grouped by source transaction; deduplicating within a
  // group is enough because pairs from different sources never collide.
  std::vector<Candidate> next;
  std::vector<Itemset> scratch;
  std::size_t i = 0;
  while (i < state.pool.size()) {
    const TxId source = state.pool[i].source_tx;
    scratch.clear();
    for (; i < state.pool.size() && state.pool[i].source_tx == source; ++i) {
      for (auto& sub : k_minus_1_subsets(state.pool[i].itemset)) scratch.push_back(std::move(sub));
    }
    generated += scratch.size();
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    for (auto& sub : scratch) next.push_back(Candidate{std::move(sub), source});
    check_cap(next.size(), pool_cap, next_level);
  }

  auto absorb_end = std::find_if(state.pending.begin(), state.pending.end(),
                                 [&](TxId t) { return db[t].items.size() != next_level; });
  for (auto it = state.pending.begin(); it != absorb_end; ++it) {
    next.push_back(Candidate{db[*it].items, *it});
  }
  state.pending.erase(state.pending.begin(), absorb_end);
  check_cap(next.size(), pool_cap, next_level);

  state.pool = std::move(next);
  state.level = next_level;
  return generated;
}

MfifResult mfif_mine(const TransactionDatabase& db, const MiningParams& params) {
  params.validate();
  MfifResult result;
  LevelState state = mfif_seed(db);
  check_cap(state.pool.size(), params.pool_cap, state.level);
  result.peak_pool_size = state.pool.size();
  if (state.level == 0) return result;

  for (;;) {
    ++result.levels_descended;
    ++result.counting_passes;
    for (auto& g : group_pool(state.pool)) {
      if (g.sources.size() >= params.min_support_count) {
        const auto n = g.sources.size();
        result.itemsets.push_back(SupportedItemset{std::move(g.itemset), n, std::move(g.sources)});
      }
    }
    if (!result.itemsets.empty()) {
      result.level = state.level;
      return result;
    }
    if (state.level == 1) return result;
    result.subset_expansions += mfif_descend(db, state, params.pool_cap);
    result.peak_pool_size = std::max(result.peak_pool_size, state.pool.size());
  }
}

std::vector<SupportedItemset> mfif_mine_all_maximal(const TransactionDatabase& db,
                                                    const MiningParams& params) {
  params.validate();
  std::vector<SupportedItemset> maximal;
  LevelState state = mfif_seed(db);
  check_cap(state.pool.size(), params.pool_cap, state.level);
  if (state.level == 0) return maximal;

  auto covered = [&](const Itemset& x) {
    return std::any_of(maximal.begin(), maximal.end(),
                       [&](const SupportedItemset& m) { return x.is_subset_of(m.itemset); });
  };

  for (;;) {
    std::erase_if(state.pool, [&](const Candidate& c) { return covered(c.itemset); });
    for (auto& g : group_pool(state.pool)) {
      if (g.sources.size() >= params.min_support_count) {
        const auto n = g.sources.size();
        maximal.push_back(SupportedItemset{std::move(g.itemset), n, std::move(g.sources)});
      }
    }
    if (state.level == 1) break;
    mfif_descend(db, state, params.pool_cap);
  }
  sort_canonical(maximal);
  return maximal;
}

}  // namespace mfim
