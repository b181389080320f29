#include <iostream>

#include "swm/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return swm::cli::run(args, std::cout, std::cerr);
}
