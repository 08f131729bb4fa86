#include "pendagm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return pendagm::cli::run(argc, argv, std::cout, std::cerr);
}
