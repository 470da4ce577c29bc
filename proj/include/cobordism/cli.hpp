#ifndef COBORDISM_CLI_HPP
#define COBORDISM_CLI_HPP

#include <istream>
#include <string>
#include <vector>

namespace cobordism {

struct CommandResult {
    int status = 0; // 0 ok, 1 mathematical failure, 2 usage or parse error
    std::string out;
    std::string err;
};

// Runs one command line (without the program name). `in` supplies graph
// JSON for gkm commands that are not given --graph.
CommandResult run_command(const std::vector<std::string>& args, std::istream& in);
CommandResult run_command(const std::vector<std::string>& args);

} // namespace cobordism

#endif
