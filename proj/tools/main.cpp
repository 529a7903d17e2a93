#include <iostream>

#include "modcurve/cli/cli.hpp"

int main(int argc, char** argv) { return modcurve::run_cli(argc, argv, std::cout, std::cerr); }
