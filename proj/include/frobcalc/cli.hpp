#ifndef FROBCALC_CLI_HPP_
#define FROBCALC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace frobcalc {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotEqual = 1,
  kExitInputError = 2,
  kExitNotFound = 3,
  kExitResource = 4,
};

/// Runs one invocation. `args` excludes the program name. Standard input is
/// read only for "-" arguments.
int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace frobcalc

#endif  // FROBCALC_CLI_HPP_
