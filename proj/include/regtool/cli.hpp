#ifndef REGTOOL_CLI_HPP
#define REGTOOL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace regtool {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 a verified property failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace regtool

#endif  // REGTOOL_CLI_HPP
