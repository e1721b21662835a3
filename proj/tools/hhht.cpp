#include <iostream>

#include "hhht/cli.hpp"

int main(int argc, char** argv) { return hhht::run_cli(argc, argv, std::cout, std::cerr); }
