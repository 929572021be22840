#include "meadow/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return meadow::cli::run(argc, argv, std::cout, std::cerr); }
