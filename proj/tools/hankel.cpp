#include <iostream>

#include "hankel/cli.hpp"

int main(int argc, char** argv) { return hankel::run_cli(argc, argv, std::cout, std::cerr); }
