#include <iostream>

#include "stn/cli.hpp"

int main(int argc, char** argv) {
    return stn::cli::run(argc, argv, std::cout, std::cerr);
}
