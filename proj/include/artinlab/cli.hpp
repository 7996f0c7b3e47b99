#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace artinlab::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { Ok = 0, Invariant = 1, Usage = 2, Resource = 3 };

/// Parses argv (argv[0] is the program name), runs one subcommand and writes
/// the report to `out` (or the --out file). Diagnostics and progress go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artinlab::cli
