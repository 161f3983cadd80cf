#include <iostream>

#include "tavis/cli.hpp"

int main(int argc, char** argv) { return tavis::cli::run(argc, argv, std::cout, std::cerr); }
