#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz::cli
