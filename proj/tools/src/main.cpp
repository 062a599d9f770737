#include <iostream>
#include <string>
#include <vector>

#include "maxcurve_cli/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return maxcurve::cli::run(args, std::cout, std::cerr);
}
