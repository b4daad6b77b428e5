#include <iostream>

#include "nufact/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nufact::cli::run(std::move(args), std::cout, std::cerr);
}
