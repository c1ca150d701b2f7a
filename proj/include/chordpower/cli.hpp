#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordpower::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 input error, 2 I/O error. Diagnostics go to `err` only.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Two decimals, half away from zero.
std::string round2(double value);

}  // namespace chordpower::cli
