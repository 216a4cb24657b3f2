#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grl {

/// Command-line front end. Data goes to `out`, diagnostics to `err`.
/// Exit status: 0 success, 1 verification mismatch, 2 usage or invariant
/// error, 3 enumeration budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grl
