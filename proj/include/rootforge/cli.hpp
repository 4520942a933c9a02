#pragma once

#include <iosfwd>

namespace rootforge {

/// Entry point of the command-line tool. Returns 0 on success, 1 when a
/// verification or computation fails and 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rootforge
