#pragma once

#include <ostream>

namespace citemetrics {

// Exit codes: 0 success, 1 usage error, 2 data error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Entry point of the `citemetrics` command: compute, rank, compare, validate
// and synth. Never throws; every failure maps to an exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace citemetrics
