#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace girthlab::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
    kOk = 0,
    kFinding = 1,       ///< forged-λ audit failure or theorem contradiction
    kInputError = 2,
    kInconsistent = 3,  ///< computed values contradict a proven bound
    kSuspended = 4,     ///< node budget hit; checkpoint written
};

/// Runs the command line args (without the program name). stdout gets only
/// the report, stderr only diagnostics.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace girthlab::cli
