#include <iostream>

#include "seqtrial/cli.hpp"

int main(int argc, char** argv) {
    return seqtrial::cli::run(argc, argv, std::cout, std::cerr);
}
