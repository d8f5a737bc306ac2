#include <iostream>
#include <string>
#include <vector>

#include "kotzig/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kotzig::cli::run(args, std::cout);
}
