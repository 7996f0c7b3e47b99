#include <iostream>

#include "artinlab/cli.hpp"

int main(int argc, char** argv) { return artinlab::cli::run(argc, argv, std::cout, std::cerr); }
