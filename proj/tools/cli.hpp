#pragma once

#include <iosfwd>

namespace loewy::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
    kSuccess = 0,     // success, property true, verification pass
    kFalse = 1,       // property false or verification failure
    kUsage = 2,       // bad arguments
    kInvalid = 3,     // unreadable, unparsable or invalid lattice input
};

/// Run one command. `in` backs the "-" file argument.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace loewy::cli
