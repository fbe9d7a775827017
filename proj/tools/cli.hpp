#pragma once

#include <iosfwd>

namespace signedpinv {

// Command-line front end, parameterized over its streams so tests can drive
// it in-process. Returns the process exit code: 0 success, 1 a requested
// check failed, 2 usage or input errors, 3 an internal verification
// tripped.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace signedpinv
