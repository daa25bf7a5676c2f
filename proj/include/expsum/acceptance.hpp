#pragma once

#include <iosfwd>

namespace expsum {

// Runs the full verification table, printing one pass/fail line per
// criterion; returns true when every criterion passes.
bool run_acceptance(std::ostream& os);

}  // namespace expsum
