#pragma once

#include <iosfwd>

namespace weiljac {

/// Command-line entry point. Exit codes: 0 success (or all checks passed),
/// 1 domain error or failed check, 2 parse error in arguments or input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weiljac
