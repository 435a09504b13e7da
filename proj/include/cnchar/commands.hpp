#pragma once

#include <ostream>

namespace cnchar {

/// Exit status: 0 success, 1 verified mismatch, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cnchar
