#pragma once

#include <ostream>

namespace mfim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitFormat = 2;
inline constexpr int kExitParam = 3;
inline constexpr int kExitResource = 4;

/// Entry point for the `mfim` tool: subcommands mine | generate | bench.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mfim::cli
