// Command-line front end.

#ifndef KSDS_CLI_HPP_
#define KSDS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ksds::cli {

  enum ExitCode : int {
    success        = 0,
    counterexample = 1,  // a verification found a failing instance
    usage_error    = 2,  // bad flags or unparsable input
    guard_exceeded = 3   // a resource bound was hit
  };

  //! Runs one command; `args` excludes the program name. Results go to
  //! `out`, diagnostics to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace ksds::cli

#endif  // KSDS_CLI_HPP_
