// The `hk` command-line driver, callable in-process for testing.

#ifndef HKMON_CLI_HPP_
#define HKMON_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace hkmon::cli {

  enum exit_code : int { success = 0, domain_error = 1, usage_error = 2 };

  //! Runs one invocation; `args` excludes the program name. Normal output
  //! goes to `out`, diagnostics to `err`.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace hkmon::cli

#endif  // HKMON_CLI_HPP_
