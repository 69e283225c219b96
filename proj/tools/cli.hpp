#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace narayana::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kInputError = 2,
    kCapacityError = 3,
    kMalformedStream = 4,
};

// Runs one `nuc` invocation. `args` excludes the program name. Standard
// streams are injected so tests can drive every subcommand in process.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace narayana::cli
