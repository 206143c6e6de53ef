#ifndef ABELIAN_TOOLS_CLI_HPP_
#define ABELIAN_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace abelian::cli {

  enum ExitCode : int {
    kOk       = 0,
    kFailed   = 1,  // a check or verification did not pass
    kUsage    = 2,
    kResource = 3,  // budget or precision exhausted
  };

  // Runs one command line (without the program name), writing normal output
  // to `out` and diagnostics to `err`. Returns the process exit code.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace abelian::cli

#endif  // ABELIAN_TOOLS_CLI_HPP_
