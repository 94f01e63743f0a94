#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilchar {

// Command-line entry point, testable without a process boundary.
// args excludes the program name. Exit codes: 0 success, 1 verification
// failure or scan evidence against a computed bound, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilchar
