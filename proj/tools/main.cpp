#include <iostream>

#include "cuboids/cli.hpp"

int main(int argc, char** argv) { return cuboids::cli::run(argc, argv, std::cout, std::cerr); }
