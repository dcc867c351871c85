#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edist {

/// Command-line entry point, separated from main() so tests can drive it
/// in-process. `args` excludes the program name. Exit codes: 0 success,
/// 2 usage or input-format errors, 3 language with fewer than two words,
/// 4 timeout while computing.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace edist
