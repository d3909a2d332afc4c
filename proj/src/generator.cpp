#include "mfim/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mfim/errors.hpp"

namespace mfim {
namespace {

// mt19937_64's output sequence is fixed by the standard; the helpers
// below avoid the library-specific distributions so corpora are stable
// across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  /// First `k` entries of a partial Fisher-Yates shuffle of 0..n-1.
  std::vector<std::uint32_t> sample(std::size_t n, std::size_t k) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0U);
    for (std::size_t i = 0; i < k; ++i) std::swap(v[i], v[i + below(n - i)]);
    v.resize(k);
    std::sort(v.begin(), v.end());
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

void GeneratorSpec::validate() const {
  if (n_transactions == 0) throw ParamError("generator needs at least one transaction");
  if (universe_size == 0) throw ParamError("generator needs at least one item");
  if (planted_itemset_size > universe_size) {
    throw ParamError("planted itemset larger than the universe");
  }
  if (planted_copies > n_transactions) {
    throw ParamError("more planted copies than transactions");
  }
  if (!(noise_density >= 0.0 && noise_density <= 1.0)) {
    throw ParamError("noise density must lie in [0, 1]");
  }
}

GeneratedCorpus generate_corpus(const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  std::vector<ItemId> planted_items;
  for (auto i : rng.sample(spec.universe_size, spec.planted_itemset_size)) planted_items.emplace_back(i);
  const Itemset planted = Itemset::from_sorted(std::move(planted_items));

  const std::size_t copies = spec.planted_itemset_size == 0 ? 0 : spec.planted_copies;
  std::vector<TxId> planted_rows;
  for (auto t : rng.sample(spec.n_transactions, copies)) planted_rows.push_back(t);

  std::vector<Itemset> rows;
  rows.reserve(spec.n_transactions);
  auto next_planted = planted_rows.begin();
  for (std::size_t t = 0; t < spec.n_transactions; ++t) {
    if (next_planted != planted_rows.end() && *next_planted == t) {
      rows.push_back(planted);
      ++next_planted;
      continue;
    }
    std::vector<ItemId> items;
    for (std::uint32_t j = 0; j < spec.universe_size; ++j) {
      if (rng.unit() < spec.noise_density) items.emplace_back(j);
    }
    if (spec.max_noise_size) {
      while (items.size() > *spec.max_noise_size) {
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(rng.below(items.size())));
      }
    }
    rows.push_back(Itemset::from_sorted(std::move(items)));
  }

  return GeneratedCorpus{TransactionDatabase(spec.universe_size, std::move(rows)), planted,
                         std::move(planted_rows)};
}

}  // namespace mfim
