#pragma once

#include <iosfwd>

namespace perpdiss {

enum ExitCode { kPass = 0, kMismatch = 1, kInputError = 2, kGuard = 3, kSamplingFailure = 4 };

// Entry point of the command-line tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace perpdiss
