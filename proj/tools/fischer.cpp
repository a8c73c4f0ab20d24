#include <iostream>

#include "fischer/cli.hpp"

int main(int argc, char** argv) { return fischer::cli_main(argc, argv, std::cout, std::cerr); }
