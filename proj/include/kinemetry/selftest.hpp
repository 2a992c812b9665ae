#pragma once

#include <iosfwd>

namespace kinemetry {

// Runs the exact (non-Monte-Carlo) invariant suite; prints one line per check
// and returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace kinemetry
