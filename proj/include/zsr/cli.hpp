#pragma once

#include <ostream>

namespace zsr {

/// Exit status: 0 success, 1 bad parameters or input, 2 inconclusive
/// (budget exhausted), 3 internal consistency or I/O failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zsr
