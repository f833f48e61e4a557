#pragma once

#include <iosfwd>

namespace injword::cli {

enum ExitCode : int { ok = 0, internal_error = 1, usage_error = 2, verification_failed = 3, limit_exceeded = 4 };

/// Runs one command line. Results go to `out`, diagnostics and timing to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace injword::cli
