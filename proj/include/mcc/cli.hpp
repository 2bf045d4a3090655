#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcc::cli {

/// Exit codes of the `mcc` tool.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kInconsistent = 3,
};

/// Runs the tool on `args` (without the program name). Records go to `out`,
/// single-line JSON error reports to `err`. `out_is_tty` feeds MCC_COLOR=auto.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_tty = false);

}  // namespace mcc::cli
