#ifndef RSP_CLI_HPP
#define RSP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rsp::cli {

// Dispatch a command line (without the program name). Returns 0 on
// success, 2 on argument errors, 1 on runtime failures such as an
// unwritable output file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsp::cli

#endif
