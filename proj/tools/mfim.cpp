#include <iostream>

#include "mfim/cli.hpp"

int main(int argc, char** argv) { return mfim::cli::run(argc, argv, std::cout, std::cerr); }
