#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace padic::cli {

enum ExitCode : int {
  kOk = 0,
  kNotCertified = 1,  // also: verify found a counterexample
  kUsageError = 2,    // bad flags or unparseable input
  kDomainError = 3,
};

/// Runs the command line `args` (without the program name). `cap_env` is the
/// value of PADIC_NEWTON_CAP, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& cap_env = std::nullopt);

}  // namespace padic::cli
