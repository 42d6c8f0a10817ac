#include <iostream>

#include "gluecoeff/cli.hpp"

int main(int argc, char** argv) { return gluecoeff::cli::run(argc, argv, std::cout, std::cerr); }
