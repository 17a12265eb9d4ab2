#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hytet::cli {

/// Entry point of the command-line interface.  Results go to `out`,
/// diagnostics and errors to `err`.  Exit codes: 0 success, 1 check-suite
/// failure, 2 malformed input, 3 not realizable / wrong shape, 4 numerical
/// failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv-style convenience wrapper (argv[0] is skipped).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hytet::cli
