#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace dalli {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerification = 2;

/// Runs one `dalli` invocation. `args` excludes the program name. JSON goes
/// to `out`, diagnostics to `err`.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dalli
