#include <iostream>

#include "hytet/cli.hpp"

int main(int argc, char** argv) {
    return hytet::cli::run(argc, argv, std::cout, std::cerr);
}
