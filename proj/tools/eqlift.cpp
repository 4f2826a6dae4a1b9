#include <iostream>

#include "eqlift/cli.hpp"

int main(int argc, char** argv) { return eqlift::cli::run(argc, argv, std::cout, std::cerr); }
