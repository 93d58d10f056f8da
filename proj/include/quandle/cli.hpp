// SPDX-License-Identifier: Apache-2.0

#ifndef QUANDLE_CLI_HPP
#define QUANDLE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace quandle::cli {

/// Exit status contract shared by every subcommand.
enum Status : int {
  kOk = 0,          // success, or the checked property holds
  kPropertyFails = 1,
  kUsageError = 2,  // bad arguments or unparsable input
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quandle::cli

#endif  // QUANDLE_CLI_HPP
