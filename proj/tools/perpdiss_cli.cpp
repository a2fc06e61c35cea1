#include "perpdiss/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return perpdiss::run_cli(argc, argv, std::cout, std::cerr); }
