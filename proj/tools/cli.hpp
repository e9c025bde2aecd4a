#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordkit::cli {

enum ExitCode : int
{
    kOk = 0,
    kParseError = 1,
    kIllDefined = 2,
};

/// Runs one command line (without the program name). Output reaches `out`
/// only when the command succeeds; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ordkit::cli
