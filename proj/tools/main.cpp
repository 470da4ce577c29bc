#include <iostream>
#include <string>
#include <vector>

#include "cobordism/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = cobordism::run_command(args, std::cin);
    std::cout << result.out;
    std::cerr << result.err;
    return result.status;
}
