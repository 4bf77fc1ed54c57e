#pragma once

#include <iosfwd>

namespace cosmetic {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInternal = 3,
  kExitMeridian = 4,
  kExitEqualSlopes = 5,
  kExitCheckFailed = 6,
};

/// Entry point of the `cosmetic` command; argv[0] is the program name.
int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace cosmetic
