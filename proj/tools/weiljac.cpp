#include "weiljac/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return weiljac::run_cli(argc, argv, std::cout, std::cerr); }
