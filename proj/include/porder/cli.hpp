#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace porder::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 2,
  kBudgetExceeded = 3,
  kVerificationFailure = 4,
};

// Runs one subcommand; args exclude the program name. JSON results go to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace porder::cli
