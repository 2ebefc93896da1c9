#include <iostream>

#include "psifloor/cli.hpp"

int main(int argc, char** argv) { return psifloor::run_cli(argc, argv, std::cout, std::cerr); }
