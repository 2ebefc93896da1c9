#pragma once

#include <iosfwd>

namespace psifloor {

/// Exit codes: 0 success, 1 verification or crosscheck failure, 2 usage or domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psifloor
