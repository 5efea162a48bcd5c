#pragma once

#include <ostream>

namespace rbn {

/// Exit codes: 0 success, 1 Unknown verdict, 2 input error, 3 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rbn
