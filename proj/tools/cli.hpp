#pragma once

#include <iosfwd>

namespace tmkit::cli
{
    /// Runs one command line. The human-readable report goes to `out`,
    /// diagnostics to `err`. Returns the process exit code: 0 for a positive
    /// answer, 1 for a negative one, 2 for any error.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}
