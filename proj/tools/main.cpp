#include <iostream>

#include "rootforge/cli.hpp"

int main(int argc, char** argv) { return rootforge::run_cli(argc, argv, std::cout, std::cerr); }
