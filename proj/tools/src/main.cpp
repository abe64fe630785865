#include <iostream>

#include "nakarig_cli/cli.hpp"

int main(int argc, char** argv) {
    return nakarig::cli::run(argc, argv, std::cout, std::cerr);
}
