#include "toricdiv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return toricdiv::run_cli(argc, argv, std::cout, std::cerr); }
