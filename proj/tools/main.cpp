#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::ios_base::sync_with_stdio(false);
    const std::vector<std::string> args(argv + 1, argv + argc);
    return pgsteg::cli::run(args, std::cout, std::cerr);
}
