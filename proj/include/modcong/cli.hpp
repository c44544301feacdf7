#ifndef MODCONG_CLI_HPP
#define MODCONG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace modcong::cli {

// Full command-line entry point (argv without the program name).
// Exit codes: 0 all checks pass, 1 at least one check failed (report still
// emitted), 2 usage or parameter error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace modcong::cli

#endif
