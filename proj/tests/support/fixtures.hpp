#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "mfim/txdb.hpp"

namespace mfim::testing {

/// The five-transaction, three-item worked example.
TransactionDatabase paper_db();

/// Ten transactions over twenty items with one 12-itemset in two rows and
/// every other row smaller. Rebuilt from the console figure.
TransactionDatabase fig3_db();

std::string data_path(const std::string& name);

/// Random database with 1..max_items items and 1..max_tx transactions;
/// per-database density drawn uniformly from [0.1, 0.9].
TransactionDatabase random_db(std::mt19937_64& rng, std::size_t max_items, std::size_t max_tx);

}  // namespace mfim::testing
