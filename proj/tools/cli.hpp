#pragma once

#include <ostream>

namespace linarb {

// Entry point of the linarb tool. Exit codes: 0 success, 1 domain error
// (infeasible, exhausted, invalid input, failed verification), 2 usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linarb
