#pragma once

#include <ostream>

namespace infodesign {

// Runs the full verification suite, printing one pass/fail line per
// criterion. Returns the number of failed criteria.
int run_acceptance(std::ostream& out);

}  // namespace infodesign
