#pragma once

#include <iosfwd>

namespace prism::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidLabeling = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kInternalError = 3;

/// Dispatches `prism <command> [--flags]`; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prism::cli
