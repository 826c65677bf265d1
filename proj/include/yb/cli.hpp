#ifndef YB_CLI_HPP
#define YB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace yb::cli {

/// Runs the command line given by args (without argv[0]).
/// Exit codes: 0 all checks hold, 1 at least one check fails (witnesses in
/// the report), 2 input/usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace yb::cli

#endif
