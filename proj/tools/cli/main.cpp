#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
    return projcoh_cli_run(argc, argv, std::cout, std::cerr);
}
