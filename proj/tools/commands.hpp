#pragma once

#include <ostream>

namespace hurwitz::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudget = 3 };

// Parses argv and runs one subcommand; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
