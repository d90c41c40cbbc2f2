#include <iostream>

#include "frabessel/cli.hpp"

int main(int argc, char** argv) { return frabessel::run_cli(argc, argv, std::cout, std::cerr); }
