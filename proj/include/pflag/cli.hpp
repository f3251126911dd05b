#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pflag {

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command; args excludes the program name. Domain errors are
/// reported on err as "error: <Name>: <message>".
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pflag
