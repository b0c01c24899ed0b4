#include <iostream>

#include "utlab/cli.hpp"

int main(int argc, char** argv) { return utlab::run_cli(argc, argv, std::cout, std::cerr); }
