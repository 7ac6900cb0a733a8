#pragma once

#include <ostream>

namespace dirichlet::cli {

/// Exit codes of `run`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_cap_exceeded = 3;

/// Parses argv and executes one subcommand, writing results to `out` and
/// diagnostics to `err`. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dirichlet::cli
