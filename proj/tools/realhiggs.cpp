#include <iostream>

#include "realhiggs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return realhiggs::run_cli(args, std::cout, std::cerr);
}
