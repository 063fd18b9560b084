#include <iostream>

#include "etacrit/cli.hpp"

int main(int argc, char** argv) { return etacrit::run_cli(argc, argv, std::cout, std::cerr); }
