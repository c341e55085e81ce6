#include <iostream>

#include "relqhe/cli.hpp"

int main(int argc, char** argv) { return relqhe::run_cli(argc, argv, std::cout, std::cerr); }
