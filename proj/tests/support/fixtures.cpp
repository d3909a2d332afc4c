#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace mfim::testing {

TransactionDatabase paper_db() { return parse_matrix("1 1 0\n1 0 1\n1 1 1\n1 0 1\n1 0 0\n"); }

std::string data_path(const std::string& name) {
  return std::string(MFIM_TEST_DATA_DIR) + "/" + name;
}

TransactionDatabase fig3_db() {
  std::ifstream in(data_path("fig3_reconstructed.txt"));
  return parse_matrix(in);
}

TransactionDatabase random_db(std::mt19937_64& rng, std::size_t max_items, std::size_t max_tx) {
  std::uniform_int_distribution<std::size_t> items_dist(1, max_items);
  std::uniform_int_distribution<std::size_t> tx_dist(1, max_tx);
  std::uniform_real_distribution<double> density_dist(0.1, 0.9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t u = items_dist(rng);
  const std::size_t n = tx_dist(rng);
  const double density = density_dist(rng);
  std::vector<Itemset> rows;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<ItemId> items;
    for (std::uint32_t j = 0; j < u; ++j) {
      if (unit(rng) < density) items.emplace_back(j);
    }
    rows.push_back(Itemset(std::move(items)));
  }
  return TransactionDatabase(u, std::move(rows));
}

}  // namespace mfim::testing
