#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schemegb {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitScheme = 3, kExitAnalysis = 4 };

// Runs the command line `args` (without the program name). Spec path "-"
// reads `in`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace schemegb
