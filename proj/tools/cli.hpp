#ifndef ACSV_TOOLS_CLI_HPP
#define ACSV_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace acsv::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kPositiveDimensional = 3,
  kNotSmooth = 4,
  kSpaiExist = 10,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. `env_prec` is the value of ACSV_PREC, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* env_prec = nullptr);

}  // namespace acsv::cli

#endif  // ACSV_TOOLS_CLI_HPP
