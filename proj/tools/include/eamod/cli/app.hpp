#pragma once

#include <iosfwd>

namespace eamod::cli {

/// Exit codes: 0 success, 1 failed check or library error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eamod::cli
