#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace naisargik::cli {

enum ExitCode : int {
    kOk = 0,
    kViolation = 1,  // a verified property failed; a witness was printed
    kUsage = 2,      // bad flags, unknown ids, malformed words, out-of-domain parameters
    kResource = 3,   // enumeration or sphere guard, or integer capacity
};

/// Runs the command line `args` (program name excluded) against the given streams.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace naisargik::cli
