#include "satake/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return satake::run_cli(argc, argv, std::cout, std::cerr); }
