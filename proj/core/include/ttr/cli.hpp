#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ttr::cli {

// Dispatches the full command-line surface (subcommands coeffs, family,
// enumerate, cutsets, compare, search, verify, plot-data, cache) and returns
// the process exit code: 0 success, 1 a checked claim failed, 2 usage or
// input error, 3 enumeration budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ttr::cli
