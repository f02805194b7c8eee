#ifndef RIESZ_TOOLS_CLI_HPP
#define RIESZ_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace riesz::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 1 on a library error (reported as "error: <code>: <message>"
/// on err), 2 on a usage error. `verify` returns 1 when any suite fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli

#endif  // RIESZ_TOOLS_CLI_HPP
