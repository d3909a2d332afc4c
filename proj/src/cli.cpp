#include "mfim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mfim/bench.hpp"
#include "mfim/errors.hpp"
#include "mfim/generator.hpp"
#include "mfim/report.hpp"
#include "mfim/rules.hpp"
#include "mfim/runner.hpp"
#include "mfim/txdb.hpp"

namespace mfim::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw ParamError("cannot write output file '" + path + "'");
}

std::size_t infer_universe(const std::string& text) {
  std::size_t largest = 1;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
    if (ec == std::errc{} && ptr == tok.data() + tok.size()) largest = std::max(largest, n);
  }
  return largest;
}

TransactionDatabase load(const std::string& path, const std::string& format,
                         std::optional<std::size_t> universe) {
  const std::string text = read_file(path);
  if (format == "matrix") return parse_matrix(text);
  return parse_item_lists(text, universe ? *universe : infer_universe(text));
}

struct MineArgs {
  std::string input;
  std::string format = "matrix";
  std::optional<std::size_t> universe;
  std::string algorithm = "mfif";
  std::string min_support;
  std::string min_confidence = "0";
  bool rules = false;
  bool single_consequent = false;
  std::string output = "text";
  std::size_t pool_cap = kDefaultPoolCap;
};

int cmd_mine(const MineArgs& a, std::ostream& out) {
  const TransactionDatabase db = load(a.input, a.format, a.universe);
  MiningParams params;
  params.min_support_count = MiningParams::parse_min_support(a.min_support, db.size());
  params.min_confidence = Ratio::parse_decimal(a.min_confidence);
  params.pool_cap = a.pool_cap;
  params.validate();

  MineReport report;
  report.n_transactions = db.size();
  report.universe_size = db.universe_size();
  report.params = params;
  report.outcome = run_algorithm(db, parse_algorithm(a.algorithm), params, a.rules);
  if (a.rules) {
    report.rules = generate_rules(db, report.outcome.rule_sources, params,
                                  RuleOptions{a.single_consequent});
  }

  if (a.output == "json") {
    out << format_json(report);
  } else if (a.output == "csv") {
    out << format_csv(report);
  } else {
    out << format_text(report);
  }
  return kExitOk;
}

struct GenerateArgs {
  GeneratorSpec spec;
  std::string format = "matrix";
  std::string out_path;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const GeneratedCorpus corpus = generate_corpus(a.spec);
  const std::string text =
      a.format == "items" ? to_item_lists_text(corpus.db) : to_matrix_text(corpus.db);
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_file(a.out_path, text);
  }
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::size_t> sizes;
  std::vector<std::string> inputs;
  std::string format = "matrix";
  std::optional<std::size_t> universe;
  GeneratorSpec spec;
  std::optional<std::size_t> max_noise_size;
  std::vector<std::string> algorithms{"mfif", "apriori"};
  std::size_t reps = 3;
  std::string min_support = "2";
  std::size_t pool_cap = kDefaultPoolCap;
  std::string out_path;
  std::string plot_path;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchOptions options;
  options.algorithms.clear();
  for (const auto& name : a.algorithms) options.algorithms.push_back(parse_algorithm(name));
  options.repetitions = a.reps;
  options.min_support = a.min_support;
  options.pool_cap = a.pool_cap;

  std::vector<BenchCorpus> corpora;
  for (const auto& path : a.inputs) corpora.push_back({path, load(path, a.format, a.universe)});
  for (std::size_t n : a.sizes) {
    GeneratorSpec spec = a.spec;
    spec.n_transactions = n;
    spec.max_noise_size = a.max_noise_size;
    if (!spec.max_noise_size && spec.planted_itemset_size > 0) {
      spec.max_noise_size = spec.planted_itemset_size - 1;
    }
    corpora.push_back({"generated-" + std::to_string(n), generate_corpus(spec).db});
  }
  if (corpora.empty()) throw ParamError("bench needs --sizes or --input");

  const BenchReport report = run_bench(corpora, options);
  if (a.out_path.empty()) {
    out << report.to_csv();
  } else {
    write_file(a.out_path, report.to_csv());
  }
  if (!a.plot_path.empty()) write_file(a.plot_path, report.plot_csv());
  for (const auto& row : report.rows) {
    if (!row.ok) err << "bench: " << row.corpus << " / " << row.algorithm << " failed: " << row.error << '\n';
  }
  if (!report.consistent()) err << "bench: algorithms disagree on result level or count\n";
  return report.all_failed() ? kExitFailure : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal frequent itemset mining"};
  app.name("mfim");
  app.require_subcommand(1);

  const std::vector<std::string> formats{"matrix", "items"};

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Mine frequent itemsets from a transaction file");
  mine_cmd->add_option("--input", mine.input, "Transaction file")->required();
  mine_cmd->add_option("--format", mine.format)->check(CLI::IsMember(formats));
  mine_cmd->add_option("--universe", mine.universe, "Item count for the items format");
  mine_cmd->add_option("--algorithm", mine.algorithm)
      ->check(CLI::IsMember({"mfif", "mfif-all", "apriori", "brute"}));
  mine_cmd->add_option("--min-support", mine.min_support, "Count N or percent P%")->required();
  mine_cmd->add_option("--min-confidence", mine.min_confidence);
  mine_cmd->add_flag("--rules", mine.rules, "Also emit association rules");
  mine_cmd->add_flag("--single-consequent", mine.single_consequent);
  mine_cmd->add_option("--output", mine.output)->check(CLI::IsMember({"text", "json", "csv"}));
  mine_cmd->add_option("--pool-cap", mine.pool_cap);

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic planted corpus");
  gen_cmd->add_option("--transactions", gen.spec.n_transactions);
  gen_cmd->add_option("--universe", gen.spec.universe_size);
  gen_cmd->add_option("--planted-size", gen.spec.planted_itemset_size);
  gen_cmd->add_option("--copies", gen.spec.planted_copies);
  gen_cmd->add_option("--noise", gen.spec.noise_density);
  gen_cmd->add_option("--seed", gen.spec.seed);
  gen_cmd->add_option("--max-noise-size", gen.spec.max_noise_size);
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember(formats));
  gen_cmd->add_option("--out", gen.out_path, "Output path (default stdout)");

  BenchArgs bench;
  bench.spec.noise_density = 0.25;
  auto* bench_cmd = app.add_subcommand("bench", "Compare miners on generated or given corpora");
  bench_cmd->add_option("--sizes", bench.sizes, "Generated corpus sizes")->delimiter(',');
  bench_cmd->add_option("--input", bench.inputs, "Corpus files");
  bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember(formats));
  bench_cmd->add_option("--universe", bench.spec.universe_size);
  bench_cmd->add_option("--planted-size", bench.spec.planted_itemset_size);
  bench_cmd->add_option("--copies", bench.spec.planted_copies);
  bench_cmd->add_option("--noise", bench.spec.noise_density);
  bench_cmd->add_option("--seed", bench.spec.seed);
  bench_cmd->add_option("--max-noise-size", bench.max_noise_size);
  bench_cmd->add_option("--algorithms", bench.algorithms)->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps);
  bench_cmd->add_option("--min-support", bench.min_support);
  bench_cmd->add_option("--pool-cap", bench.pool_cap);
  bench_cmd->add_option("--out", bench.out_path, "CSV report path (default stdout)");
  bench_cmd->add_option("--plot-out", bench.plot_path, "Plot series CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParam;
  }

  // Items-format universes given on the command line apply to bench inputs too.
  if (bench_cmd->count("--universe")) bench.universe = bench.spec.universe_size;

  try {
    if (*mine_cmd) return cmd_mine(mine, out);
    if (*gen_cmd) return cmd_generate(gen, out);
    return cmd_bench(bench, out, err);
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const RangeError& e) {
    err << "format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParamError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParam;
  } catch (const GuardError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParam;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace mfim::cli
