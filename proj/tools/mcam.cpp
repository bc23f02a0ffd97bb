#include <iostream>

#include "mcam/cli.hpp"

int main(int argc, char** argv) { return mcam::run_cli(argc, argv, std::cout, std::cerr); }
