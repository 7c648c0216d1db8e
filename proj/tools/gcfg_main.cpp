#include <iostream>
#include <vector>

#include "gcfg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gcfg::cli::run(std::move(args), std::cout, std::cerr);
}
