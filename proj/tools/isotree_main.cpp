#include <iostream>
#include <string>
#include <vector>

#include "isotree/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return isotree::cli::run(args, std::cout, std::cerr);
}
