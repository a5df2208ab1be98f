#include <iostream>

#include "dreg/cli.hpp"

int main(int argc, char** argv) { return dreg::run_command(argc, argv, std::cout, std::cerr); }
