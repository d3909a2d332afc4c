#include "mfim/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace mfim {

std::string format_text(const MineReport& report) {
  const auto& o = report.outcome;
  std::ostringstream os;
  os << "algorithm: " << algorithm_name(o.algorithm) << '\n'
     << "transactions: " << report.n_transactions << '\n'
     << "items: " << report.universe_size << '\n'
     << "min_support_count: " << report.params.min_support_count << '\n'
     << "level: " << o.level << '\n';
  if (o.itemsets.empty()) {
    os << "no frequent itemset\n";
  } else {
    os << "THE FREQUENT ITEM SET IS:\n";
    for (const auto& s : o.itemsets) {
      os << s.itemset.binary_row(report.universe_size) << " | " << s.itemset.labels()
         << " | support " << s.support << '\n';
    }
  }
  if (report.rules) {
    os << "RULES (min_confidence " << report.params.min_confidence.to_decimal() << "):\n";
    if (report.rules->empty()) os << "no rules\n";
    for (const auto& r : *report.rules) {
      os << r.antecedent.labels() << " => " << r.consequent.labels() << " | support " << r.support
         << " | confidence " << r.confidence.to_decimal() << '\n';
    }
  }
  os << "counters:";
  for (const auto& [name, value] : o.counters) os << ' ' << name << '=' << value;
  os << '\n';
  return os.str();
}

std::string format_json(const MineReport& report) {
  const auto& o = report.outcome;
  nlohmann::ordered_json j;
  j["algorithm"] = algorithm_name(o.algorithm);
  j["min_support_count"] = report.params.min_support_count;
  j["level"] = o.level;
  j["itemsets"] = nlohmann::ordered_json::array();
  for (const auto& s : o.itemsets) {
    j["itemsets"].push_back({{"items", s.itemset.one_based()}, {"support", s.support}});
  }
  if (report.rules) {
    j["rules"] = nlohmann::ordered_json::array();
    for (const auto& r : *report.rules) {
      j["rules"].push_back({{"antecedent", r.antecedent.one_based()},
                            {"consequent", r.consequent.one_based()},
                            {"support", r.support},
                            {"confidence", r.confidence.to_decimal()},
                            {"confidence_num", r.confidence.num},
                            {"confidence_den", r.confidence.den}});
    }
  }
  j["counters"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : o.counters) j["counters"][name] = value;
  return j.dump(2) + "\n";
}

std::string format_csv(const MineReport& report) {
  std::ostringstream os;
  os << "kind,items,support,antecedent,consequent,confidence\n";
  for (const auto& s : report.outcome.itemsets) {
    os << "itemset," << s.itemset.labels() << ',' << s.support << ",,,\n";
  }
  if (report.rules) {
    for (const auto& r : *report.rules) {
      os << "rule,," << r.support << ',' << r.antecedent.labels() << ',' << r.consequent.labels()
         << ',' << r.confidence.to_decimal() << '\n';
    }
  }
  return os.str();
}

}  // namespace mfim
