#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return coconvex::cli_main(argc, argv, std::cout, std::cerr); }
