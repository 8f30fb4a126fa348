#pragma once

#include <iostream>

namespace qent::cli {

// Stable exit codes, also documented in the README.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kNotHermitian = 2;
inline constexpr int kTraceNotUnit = 3;
inline constexpr int kNotPositive = 4;
inline constexpr int kIndeterminate = 5;

/// Run the full command-line tool. Streams default to the process streams;
/// tests substitute their own.
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace qent::cli
