#include <iostream>

#include "lpi_cli/cli.hpp"

int main(int argc, char** argv) { return lpi::cli::run(argc, argv, std::cout, std::cerr); }
