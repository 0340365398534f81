#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morselab::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
    yes = 0,
    no = 1,
    indeterminate = 2,
    usage = 3,
    input_error = 4,
    internal_error = 5,
};

/// Runs one command line (without the program name).  Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morselab::cli
