#include <iostream>
#include <string>
#include <vector>

#include "infrank/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return infrank::cli::main(args, std::cout, std::cerr);
}
