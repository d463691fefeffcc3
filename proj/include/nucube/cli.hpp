#pragma once

// Command-line front end. Exit codes: 0 success, 1 judgement failure,
// 2 parse or configuration error, 3 fuel exhausted.

#include <ostream>
#include <string>
#include <vector>

namespace nucube {

enum ExitCode : int { kExitOk = 0, kExitJudgement = 1, kExitUsage = 2, kExitFuel = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nucube
