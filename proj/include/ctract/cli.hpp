#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ctract {

// Complete command-line front end; kept out of main() so tests can drive it
// in-process.  Exit statuses: 0 yes/valid, 1 no/invalid, 2 usage or input
// error, 3 node budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctract
