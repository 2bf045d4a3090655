#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "mcc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mcc::cli::run(args, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
