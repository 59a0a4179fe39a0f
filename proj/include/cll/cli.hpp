#pragma once

#include <string>
#include <vector>

namespace cll::cli {

// Runs one subcommand (expand, compare, iadm-check, radius, oracle,
// soliton-validate) as if invoked from the command line, writing output files
// under --out. Returns the process exit code: 0 success, 2 configuration or
// validation failure, 3 numerical blow-up, 4 square-root domain violation.
int run(const std::vector<std::string>& args);

}  // namespace cll::cli
