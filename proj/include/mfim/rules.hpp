#pragma once

#include <cstdint>
#include <vector>

#include "mfim/itemset.hpp"
#include "mfim/params.hpp"
#include "mfim/txdb.hpp"

namespace mfim {

/// antecedent => consequent. `support` is that of the union and
/// `confidence` is support / support(antecedent), kept exact.
struct AssociationRule {
  Itemset antecedent;
  Itemset consequent;
  std::uint64_t support = 0;
  Ratio confidence;

  friend bool operator==(const AssociationRule& a, const AssociationRule& b) {
    return a.antecedent == b.antecedent && a.consequent == b.consequent &&
           a.support == b.support && a.confidence == b.confidence;
  }
};

struct RuleOptions {
  /// Keep only rules with a single-item consequent.
  bool single_consequent = false;
};

/// Largest frequent itemset accepted by generate_rules; it enumerates
/// every non-empty proper subset.
inline constexpr std::size_t kMaxRuleItemsetSize = 24;

/// Emits X => Z\X for every input Z and non-empty proper subset X whose
/// confidence reaches params.min_confidence. Input supports are checked
/// against the database (ConsistencyError on mismatch); inputs smaller
/// than two items or below the support threshold throw ParamError.
/// Output is sorted by antecedent, then consequent, and duplicate-free.
std::vector<AssociationRule> generate_rules(const TransactionDatabase& db,
                                            const std::vector<SupportedItemset>& frequent,
                                            const MiningParams& params, RuleOptions options = {});

/// Every subset with at least two items of the given itemsets, with
/// supports recomputed. Used to feed generate_rules from a maximal family.
std::vector<SupportedItemset> expand_for_rules(const TransactionDatabase& db,
                                               const std::vector<SupportedItemset>& maximal);

}  // namespace mfim
