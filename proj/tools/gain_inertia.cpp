#include "gain_inertia/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return gain_inertia::run_cli(args, std::cout, std::cerr);
}
