#include <iostream>
#include <string>
#include <vector>

#include "p3/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return p3::cli::execute(args, std::cin, std::cout, std::cerr);
}
