#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Runs one invocation. `args` excludes the program name. Reports go to `out`,
// diagnostics and usage text to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecal::cli
