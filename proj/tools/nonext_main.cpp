#include <iostream>

#include "nonext/cli.hpp"

int main(int argc, char** argv) { return nonext::cli::run(argc, argv, std::cout, std::cerr); }
