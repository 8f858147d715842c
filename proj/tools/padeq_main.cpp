#include <iostream>
#include <string>
#include <vector>

#include "padeq/cli.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return padeq::cli::run(args, std::cout, std::cerr);
}
