#include "mfim/rules.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "mfim/errors.hpp"

namespace mfim {
namespace {

Itemset pick(const Itemset& z, std::uint32_t bits) {
  std::vector<ItemId> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (bits & (std::uint32_t{1} << i)) out.push_back(z[i]);
  }
  return Itemset::from_sorted(std::move(out));
}

void check_size(const Itemset& z) {
  if (z.size() > kMaxRuleItemsetSize) {
    throw ParamError("itemset " + z.labels() + " is too large for rule generation");
  }
}

}  // namespace

std::vector<AssociationRule> generate_rules(const TransactionDatabase& db,
                                            const std::vector<SupportedItemset>& frequent,
                                            const MiningParams& params, RuleOptions options) {
  params.validate();
  std::map<Itemset, std::uint64_t> cache;
  auto sigma = [&](const Itemset& x) {
    auto [it, fresh] = cache.try_emplace(x, 0);
    if (fresh) it->second = support_count(db, x);
    return it->second;
  };

  std::vector<AssociationRule> rules;
  for (const auto& z : frequent) {
    if (z.itemset.size() < 2) {
      throw ParamError("rule source " + z.itemset.labels() + " needs at least two items");
    }
    check_size(z.itemset);
    const std::uint64_t actual = sigma(z.itemset);
    if (actual != z.support) {
      throw ConsistencyError("itemset " + z.itemset.labels() + " claims support " +
                             std::to_string(z.support) + " but the database gives " +
                             std::to_string(actual));
    }
    if (actual < params.min_support_count) {
      throw ParamError("itemset " + z.itemset.labels() + " is below the support threshold");
    }
    const std::uint32_t full = (std::uint32_t{1} << z.itemset.size()) - 1;
    for (std::uint32_t bits = 1; bits < full; ++bits) {
      Itemset consequent = pick(z.itemset, full & ~bits);
      if (options.single_consequent && consequent.size() != 1) continue;
      Itemset antecedent = pick(z.itemset, bits);
      const Ratio confidence{actual, sigma(antecedent)};
      if (confidence >= params.min_confidence) {
        rules.push_back(AssociationRule{std::move(antecedent), std::move(consequent), actual, confidence});
      }
    }
  }

  std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
    if (auto c = a.antecedent <=> b.antecedent; c != 0) return c < 0;
    return a.consequent < b.consequent;
  });
  rules.erase(std::unique(rules.begin(), rules.end(),
                          [](const AssociationRule& a, const AssociationRule& b) {
                            return a.antecedent == b.antecedent && a.consequent == b.consequent;
                          }),
              rules.end());
  return rules;
}

std::vector<SupportedItemset> expand_for_rules(const TransactionDatabase& db,
                                               const std::vector<SupportedItemset>& maximal) {
  std::vector<Itemset> subsets;
  for (const auto& m : maximal) {
    check_size(m.itemset);
    const std::uint32_t full = (std::uint32_t{1} << m.itemset.size()) - 1;
    for (std::uint32_t bits = 1; bits <= full; ++bits) {
      if (std::popcount(bits) >= 2) subsets.push_back(pick(m.itemset, bits));
    }
  }
  sort_canonical(subsets);
  subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());

  std::vector<SupportedItemset> out;
  out.reserve(subsets.size());
  for (const auto& x : subsets) out.push_back(support(db, x));
  return out;
}

}  // namespace mfim
