#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfim/params.hpp"
#include "mfim/rules.hpp"
#include "mfim/runner.hpp"
#include "mfim/txdb.hpp"

namespace mfim {

struct MineReport {
  std::size_t n_transactions = 0;
  std::size_t universe_size = 0;
  MiningParams params;
  MiningOutcome outcome;
  std::optional<std::vector<AssociationRule>> rules;
};

/// Console layout. Each result is one line:
///   <0/1 row> | <I-labels> | support <n>
std::string format_text(const MineReport& report);

/// {"algorithm", "min_support_count", "level", "itemsets": [{"items", "support"}],
///  "rules" (optional), "counters"}; items are 1-based.
std::string format_json(const MineReport& report);

/// Header: kind,items,support,antecedent,consequent,confidence
std::string format_csv(const MineReport& report);

}  // namespace mfim
