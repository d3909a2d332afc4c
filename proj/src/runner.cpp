#include "mfim/runner.hpp"

#include <algorithm>

#include "mfim/apriori.hpp"
#include "mfim/errors.hpp"
#include "mfim/mfif.hpp"
#include "mfim/oracle.hpp"
#include "mfim/rules.hpp"

namespace mfim {
namespace {

std::vector<SupportedItemset> at_least_pairs(std::vector<SupportedItemset> xs) {
  std::erase_if(xs, [](const SupportedItemset& s) { return s.itemset.size() < 2; });
  return xs;
}

std::size_t largest(const std::vector<SupportedItemset>& xs) {
  std::size_t k = 0;
  for (const auto& s : xs) k = std::max(k, s.itemset.size());
  return k;
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  if (name == "mfif") return Algorithm::kMfif;
  if (name == "mfif-all") return Algorithm::kMfifAll;
  if (name == "apriori") return Algorithm::kApriori;
  if (name == "brute") return Algorithm::kBrute;
  throw ParamError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kMfif: return "mfif";
    case Algorithm::kMfifAll: return "mfif-all";
    case Algorithm::kApriori: return "apriori";
    case Algorithm::kBrute: return "brute";
  }
  return "?";
}

std::size_t MiningOutcome::top_level_count() const {
  return static_cast<std::size_t>(std::count_if(itemsets.begin(), itemsets.end(), [&](const SupportedItemset& s) {
    return s.itemset.size() == level;
  }));
}

std::uint64_t MiningOutcome::scans_or_levels() const {
  const std::string_view key = algorithm == Algorithm::kMfif      ? "levels_descended"
                               : algorithm == Algorithm::kApriori ? "scan_count"
                                                                  : "";
  for (const auto& [name, value] : counters) {
    if (name == key) return value;
  }
  return 0;
}

MiningOutcome run_algorithm(const TransactionDatabase& db, Algorithm algorithm,
                            const MiningParams& params, bool with_rule_sources) {
  MiningOutcome out;
  out.algorithm = algorithm;
  switch (algorithm) {
    case Algorithm::kMfif: {
      MfifResult r = mfif_mine(db, params);
      out.level = r.level;
      out.itemsets = std::move(r.itemsets);
      out.counters = {{"levels_descended", r.levels_descended},
                      {"subset_expansions", r.subset_expansions},
                      {"counting_passes", r.counting_passes},
                      {"peak_pool_size", r.peak_pool_size}};
      if (with_rule_sources) out.rule_sources = expand_for_rules(db, out.itemsets);
      break;
    }
    case Algorithm::kMfifAll: {
      out.itemsets = mfif_mine_all_maximal(db, params);
      out.level = largest(out.itemsets);
      out.counters = {{"maximal_itemsets", out.itemsets.size()}};
      if (with_rule_sources) out.rule_sources = expand_for_rules(db, out.itemsets);
      break;
    }
    case Algorithm::kApriori: {
      AprioriResult r = apriori_mine(db, params);
      out.level = r.max_level();
      if (!r.levels.empty()) out.itemsets = r.levels.back().itemsets;
      out.counters = {{"scan_count", r.scan_count}, {"candidates_counted", r.candidates_counted}};
      if (with_rule_sources) out.rule_sources = at_least_pairs(r.all_frequent());
      break;
    }
    case Algorithm::kBrute: {
      auto all = brute_force_frequent(db, params);
      out.level = largest(all);
      for (const auto& s : all) {
        if (s.itemset.size() == out.level) out.itemsets.push_back(s);
      }
      out.counters = {{"frequent_itemsets", all.size()}};
      if (with_rule_sources) out.rule_sources = at_least_pairs(std::move(all));
      break;
    }
  }
  return out;
}

}  // namespace mfim
