#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relic::cli {

// Runs the relic command line against explicit streams so tests can drive
// it in-process. args excludes the program name. Returns the exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace relic::cli
