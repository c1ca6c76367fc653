#include <iostream>

#include "altsurf/cli.hpp"

int main(int argc, char** argv) { return altsurf::run_cli(argc, argv, std::cout, std::cerr); }
