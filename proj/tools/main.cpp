#include <iostream>

#include "permideal/cli.hpp"

int main(int argc, char** argv) { return permideal::run_cli(argc, argv, std::cout, std::cerr); }
