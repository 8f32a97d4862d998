#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qubitinv/io.hpp"

namespace qubitinv::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDegenerate = 2, kVerificationFailed = 3 };

/// Fixture or random state for `gen`. Throws BadKind, BadN.
io::json generate(const std::string& kind, int n, std::uint64_t seed);

/// Whole command-line front end; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qubitinv::cli
