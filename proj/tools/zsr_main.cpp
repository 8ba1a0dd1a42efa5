#include <iostream>

#include "zsr/cli.hpp"

int main(int argc, char** argv) { return zsr::run_cli(argc, argv, std::cout, std::cerr); }
