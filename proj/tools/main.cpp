#include <iostream>
#include <string>
#include <vector>

#include "edist/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return edist::cli_main(std::move(args), std::cout, std::cerr);
}
