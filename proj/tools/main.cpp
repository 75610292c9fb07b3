#include "hqft/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hqft::cli::run(argc, argv, std::cout, std::cerr); }
