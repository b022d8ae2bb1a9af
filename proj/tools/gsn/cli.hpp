#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gsn/config.hpp"

namespace gsn::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, UsageError = 2, DegreeGuard = 3 };

/// Runs the gsn command line with `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment::from_process());

}  // namespace gsn::cli
