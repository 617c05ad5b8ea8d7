#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indpoly {

// Runs the indpoly command line (compute|verify|gen|bench|eval) against the
// given streams. args excludes argv[0]. Exit status: 0 success, 1 input
// error or verification failure, 2 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace indpoly
