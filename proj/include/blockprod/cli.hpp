#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockprod {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

/// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockprod
