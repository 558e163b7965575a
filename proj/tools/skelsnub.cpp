#include <iostream>

#include "skelsnub/cli.hpp"

int main(int argc, char** argv) { return skelsnub::cli::run(argc, argv, std::cout, std::cerr); }
