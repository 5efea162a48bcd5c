#include "rbn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rbn::run_cli(argc, argv, std::cout, std::cerr); }
