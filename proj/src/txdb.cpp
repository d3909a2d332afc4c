#include "mfim/txdb.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "mfim/errors.hpp"

namespace mfim {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t universe_size) {
  return std::max<std::size_t>(1, (universe_size + kWordBits - 1) / kWordBits);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::string at_line(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

TransactionDatabase::TransactionDatabase(std::size_t universe_size, std::vector<Itemset> rows)
    : universe_size_(universe_size), words_(words_for(universe_size)) {
  transactions_.reserve(rows.size());
  bits_.assign(rows.size() * words_, 0);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    for (ItemId item : rows[t]) {
      if (item.index >= universe_size_) {
        throw RangeError("transaction " + std::to_string(t) + " has item " + item.label() +
                         " outside a universe of " + std::to_string(universe_size_) + " items");
      }
      bits_[t * words_ + item.index / kWordBits] |= std::uint64_t{1} << (item.index % kWordBits);
    }
    transactions_.push_back(Transaction{static_cast<TxId>(t), std::move(rows[t])});
  }
}

ItemMask TransactionDatabase::mask(const Itemset& x) const {
  ItemMask m(words_, 0);
  for (ItemId item : x) {
    if (item.index >= universe_size_) {
      throw RangeError("item " + item.label() + " outside a universe of " +
                       std::to_string(universe_size_) + " items");
    }
    m[item.index / kWordBits] |= std::uint64_t{1} << (item.index % kWordBits);
  }
  return m;
}

TransactionDatabase parse_matrix(std::istream& in) {
  std::vector<Itemset> rows;
  std::size_t width = 0;
  std::size_t first_line = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (rows.empty()) {
      width = tokens.size();
      first_line = line_no;
    } else if (tokens.size() != width) {
      throw FormatError(at_line(line_no) + "ragged row with " + std::to_string(tokens.size()) +
                        " columns, expected " + std::to_string(width) + " (from line " +
                        std::to_string(first_line) + ")");
    }
    std::vector<ItemId> items;
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      if (tokens[j] == "1") {
        items.emplace_back(static_cast<std::uint32_t>(j));
      } else if (tokens[j] != "0") {
        throw FormatError(at_line(line_no) + "token '" + std::string(tokens[j]) +
                          "' is not 0 or 1");
      }
    }
    rows.push_back(Itemset::from_sorted(std::move(items)));
  }
  if (rows.empty()) throw FormatError("no transactions");
  return TransactionDatabase(width, std::move(rows));
}

TransactionDatabase parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

TransactionDatabase parse_item_lists(std::istream& in, std::size_t universe_size) {
  if (universe_size == 0) throw ParamError("universe size must be positive");
  std::vector<Itemset> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<ItemId> items;
    for (auto tok : split_tokens(line)) {
      std::uint64_t n = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw FormatError(at_line(line_no) + "token '" + std::string(tok) +
                          "' is not an item number");
      }
      if (n < 1 || n > universe_size) {
        throw RangeError(at_line(line_no) + "item " + std::string(tok) + " outside 1.." +
                         std::to_string(universe_size));
      }
      items.emplace_back(static_cast<std::uint32_t>(n - 1));
    }
    std::sort(items.begin(), items.end());
    if (auto dup = std::adjacent_find(items.begin(), items.end()); dup != items.end()) {
      throw FormatError(at_line(line_no) + "duplicate item " + dup->label());
    }
    rows.push_back(Itemset::from_sorted(std::move(items)));
  }
  if (rows.empty()) throw FormatError("no transactions");
  return TransactionDatabase(universe_size, std::move(rows));
}

TransactionDatabase parse_item_lists(std::string_view text, std::size_t universe_size) {
  std::istringstream in{std::string(text)};
  return parse_item_lists(in, universe_size);
}

std::string to_matrix_text(const TransactionDatabase& db) {
  std::string out;
  for (const auto& t : db.transactions()) {
    out += t.items.binary_row(db.universe_size());
    out += '\n';
  }
  return out;
}

std::string to_item_lists_text(const TransactionDatabase& db) {
  std::string out;
  for (const auto& t : db.transactions()) {
    bool first = true;
    for (auto n : t.items.one_based()) {
      if (!first) out += ' ';
      out += std::to_string(n);
      first = false;
    }
    out += '\n';
  }
  return out;
}

SupportedItemset support(const TransactionDatabase& db, const Itemset& x) {
  const ItemMask m = db.mask(x);
  SupportedItemset out{x, 0, {}};
  for (TxId t = 0; t < db.size(); ++t) {
    if (db.row_contains(t, m)) out.sources.push_back(t);
  }
  out.support = out.sources.size();
  return out;
}

std::uint64_t support_count(const TransactionDatabase& db, const Itemset& x) {
  const ItemMask m = db.mask(x);
  std::uint64_t n = 0;
  for (TxId t = 0; t < db.size(); ++t) n += db.row_contains(t, m);
  return n;
}

std::vector<std::size_t> transaction_sizes(const TransactionDatabase& db) {
  std::vector<std::size_t> sizes;
  sizes.reserve(db.size());
  for (const auto& t : db.transactions()) sizes.push_back(t.items.size());
  return sizes;
}

}  // namespace mfim
