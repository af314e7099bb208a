#ifndef NK_CLI_HPP
#define NK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nk {

// Runs one command line (without the program name). Reports go to out,
// diagnostics to err. Exit code 0 on success, 2 when the trace gate
// rejects the input, 1 for any other failure. The refinement width is
// taken from --width, else the NK_REFINE_WIDTH environment variable,
// else 1/1000.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nk

#endif
