#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace awm::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kSchemaError = 2,
    kUnsolvable = 3,  // unsolvable/invalid challenge or generation failure
    kContractViolation = 4,
    kReplayMismatch = 5,
};

// Runs one invocation (args exclude the program name). Results go to `out`,
// diagnostics and the resolved seed to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace awm::cli
