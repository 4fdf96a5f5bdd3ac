#include <iostream>

#include "sabotage/cli.hpp"

int main(int argc, char** argv) { return sabotage::run_cli(argc, argv, std::cout, std::cerr); }
