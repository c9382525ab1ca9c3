#pragma once

#include <ostream>

namespace coconvex {

/// Exit codes: 0 success, 1 an inequality or chain was violated, 2 bad input.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coconvex
