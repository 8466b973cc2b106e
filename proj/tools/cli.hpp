#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptri::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kSemanticError = 3,
  kLawFailure = 4,
};

/// Runs the `ptri` front end. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptri::cli
