#pragma once

// The pwb command line. `run` takes the arguments after the program name
// and returns the process exit code: 0 success, 1 a validation
// counterexample, 2 usage or input error, 3 capacity exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace pw::cli {

enum ExitCode { kOk = 0, kCounterexample = 1, kUsage = 2, kCapacity = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pw::cli
