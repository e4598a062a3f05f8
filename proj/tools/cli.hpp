// cli.hpp - command-line front end: flag parsing, config merging and the run modes
#pragma once

#include <string>
#include <vector>

namespace dtrain::cli {

// "lo:hi:logK" for K geometrically spaced counts, or an explicit comma list;
// either way the result is deduplicated and strictly increasing
std::vector<int> parse_counts(const std::string& text);

// full front end; args exclude the program name; returns the process exit code
// (0 success, 1 verification failure, 2 usage or config error, 3 numeric failure)
int run_cli(const std::vector<std::string>& args);

} // namespace dtrain::cli
