#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) { return lasd::cli::run(argc, argv, std::cout, std::cerr); }
