#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfc {

/// Exit codes: 0 all requested checks pass, 1 a check or precondition
/// failed, 2 usage, parse or schema error (or a check that does not apply to
/// the input).
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInput = 2 };

/// Runs the `sfc` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace sfc
