#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfim/runner.hpp"
#include "mfim/txdb.hpp"

namespace mfim {

struct BenchRow {
  std::string corpus;
  std::string algorithm;
  std::size_t n_transactions = 0;
  std::size_t universe_size = 0;
  std::uint64_t min_support_count = 0;
  double wall_time_seconds = 0.0;
  std::uint64_t scans_or_levels = 0;
  std::uint64_t subset_expansions = 0;
  std::size_t result_level = 0;
  std::size_t result_count = 0;
  bool ok = false;
  std::string error;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// Successful rows on the same corpus agree on level and count.
  bool consistent() const;
  bool all_failed() const;
  std::string to_csv() const;
  /// algorithm,n_transactions,time_seconds; one series per algorithm.
  std::string plot_csv() const;
};

struct BenchCorpus {
  std::string name;
  TransactionDatabase db;
};

struct BenchOptions {
  std::vector<Algorithm> algorithms{Algorithm::kMfif, Algorithm::kApriori};
  std::size_t repetitions = 3;
  bool warmup = true;
  /// "N" or "P%", resolved against each corpus.
  std::string min_support = "2";
  std::size_t pool_cap = kDefaultPoolCap;
};

/// Times every algorithm on every corpus, one run at a time. Reports the
/// median over `repetitions` after an untimed warm-up. A failing row
/// records its error and the rest carry on.
BenchReport run_bench(const std::vector<BenchCorpus>& corpora, const BenchOptions& options);

}  // namespace mfim
