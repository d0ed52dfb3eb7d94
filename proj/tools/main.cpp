#include <iostream>
#include <string>
#include <vector>

#include "kerrneg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kerrneg::cli::run(args, std::cout, std::cerr);
}
