#include <iostream>

#include "gxb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gxb::run_cli(args, std::cout, std::cerr);
}
