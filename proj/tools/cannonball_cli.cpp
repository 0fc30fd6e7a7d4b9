#include <iostream>

#include "cannonball/cli.hpp"

int main(int argc, char** argv) { return cannonball::cli::run(argc, argv, std::cout, std::cerr); }
