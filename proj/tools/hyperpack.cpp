#include <iostream>

#include "hyperpack/cli.hpp"

int main(int argc, char** argv) { return hyperpack::run(argc, argv, std::cout, std::cerr); }
