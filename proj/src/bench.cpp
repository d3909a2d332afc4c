#include "mfim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "mfim/errors.hpp"

namespace mfim {
namespace {

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

std::uint64_t counter(const MiningOutcome& o, std::string_view name) {
  for (const auto& [k, v] : o.counters) {
    if (k == name) return v;
  }
  return 0;
}

}  // namespace

bool BenchReport::consistent() const {
  std::map<std::string, std::pair<std::size_t, std::size_t>> seen;
  for (const auto& r : rows) {
    if (!r.ok) continue;
    auto [it, fresh] = seen.try_emplace(r.corpus, r.result_level, r.result_count);
    if (!fresh && it->second != std::pair{r.result_level, r.result_count}) return false;
  }
  return true;
}

bool BenchReport::all_failed() const {
  return std::none_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.ok; });
}

std::string BenchReport::to_csv() const {
  std::ostringstream os;
  os << "corpus,algorithm,n_transactions,universe_size,min_support_count,wall_time_seconds,"
        "scans_or_levels,subset_expansions,result_level,result_count,status\n";
  os << std::fixed << std::setprecision(6);
  for (const auto& r : rows) {
    os << r.corpus << ',' << r.algorithm << ',' << r.n_transactions << ',' << r.universe_size << ','
       << r.min_support_count << ',' << r.wall_time_seconds << ',' << r.scans_or_levels << ','
       << r.subset_expansions << ',' << r.result_level << ',' << r.result_count << ','
       << (r.ok ? std::string("ok") : "error: " + r.error) << '\n';
  }
  return os.str();
}

std::string BenchReport::plot_csv() const {
  std::ostringstream os;
  os << "algorithm,n_transactions,time_seconds\n" << std::fixed << std::setprecision(6);
  std::vector<const BenchRow*> ok;
  for (const auto& r : rows) {
    if (r.ok) ok.push_back(&r);
  }
  std::stable_sort(ok.begin(), ok.end(), [](const BenchRow* a, const BenchRow* b) {
    if (a->algorithm != b->algorithm) return a->algorithm < b->algorithm;
    return a->n_transactions < b->n_transactions;
  });
  for (const auto* r : ok) os << r->algorithm << ',' << r->n_transactions << ',' << r->wall_time_seconds << '\n';
  return os.str();
}

BenchReport run_bench(const std::vector<BenchCorpus>& corpora, const BenchOptions& options) {
  if (options.repetitions == 0) throw ParamError("bench needs at least one repetition");
  BenchReport report;
  for (const auto& corpus : corpora) {
    for (Algorithm alg : options.algorithms) {
      BenchRow row;
      row.corpus = corpus.name;
      row.algorithm = std::string(algorithm_name(alg));
      row.n_transactions = corpus.db.size();
      row.universe_size = corpus.db.universe_size();
      try {
        MiningParams params;
        params.min_support_count = MiningParams::parse_min_support(options.min_support, corpus.db.size());
        params.pool_cap = options.pool_cap;
        row.min_support_count = params.min_support_count;

        if (options.warmup) run_algorithm(corpus.db, alg, params);
        std::vector<double> times;
        MiningOutcome outcome;
        for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
          const auto start = std::chrono::steady_clock::now();
          outcome = run_algorithm(corpus.db, alg, params);
          const auto stop = std::chrono::steady_clock::now();
          times.push_back(std::chrono::duration<double>(stop - start).count());
        }
        row.wall_time_seconds = median(std::move(times));
        row.scans_or_levels = outcome.scans_or_levels();
        row.subset_expansions = counter(outcome, "subset_expansions");
        row.result_level = outcome.level;
        row.result_count = outcome.top_level_count();
        row.ok = true;
      } catch (const std::exception& e) {
        row.error = e.what();
        std::replace(row.error.begin(), row.error.end(), ',', ';');
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace mfim
