#pragma once

#include <ostream>

namespace lasd::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kConfigError = 3 };

/// Entry point behind the `lasd` executable. Never throws; the return value
/// is the process exit code. Test decisions do not affect it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lasd::cli
