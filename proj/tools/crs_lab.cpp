#include <iostream>

#include "crslab/cli.hpp"

int main(int argc, char** argv) { return crslab::run_cli(argc, argv, std::cout, std::cerr); }
