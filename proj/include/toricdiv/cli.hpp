#pragma once

#include <iosfwd>

namespace toricdiv {

/// Exit status: 0 all checks pass, 1 a check failed, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toricdiv
