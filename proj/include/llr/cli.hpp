#ifndef LLR_CLI_HPP
#define LLR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace llr {

/// Command dispatch for the `llr` tool. Exit codes: 0 success, 2 usage or
/// validation error, 3 data-domain violation (e.g. non-positive entries
/// without --clamp), 4 internal numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace llr

#endif  // LLR_CLI_HPP
