#include <iostream>

#include "argcount/cli.hpp"

int main(int argc, char** argv) {
    return argcount::cli::run(argc, argv, std::cout, std::cerr);
}
