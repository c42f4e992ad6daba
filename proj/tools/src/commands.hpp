#ifndef CHEBJAC_TOOLS_COMMANDS_HPP
#define CHEBJAC_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chebjac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDomainError = 3;

/// Runs one `chebjac` invocation. `args` excludes the program name. Results
/// go to `out` unless a command is given -o; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chebjac::cli

#endif  // CHEBJAC_TOOLS_COMMANDS_HPP
