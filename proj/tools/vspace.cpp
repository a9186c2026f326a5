#include <iostream>

#include "vspace/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return vspace::run_cli(args, std::cout, std::cerr);
}
