#include <iostream>

#include "chtwist/cli.hpp"

int main(int argc, char** argv) { return chtwist::cli::run(argc, argv, std::cout, std::cerr); }
