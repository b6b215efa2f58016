#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqnres::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnresolved = 1;
inline constexpr int kExitError = 2;

/// Runs one `fqnres` invocation. `args` excludes the program name. Data goes
/// to `out`, diagnostics to `err`. Returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fqnres::cli
