#include <iostream>

#include "dparity/cli.hpp"

int main(int argc, char** argv) { return dparity::cli::run(argc, argv, std::cout, std::cerr); }
