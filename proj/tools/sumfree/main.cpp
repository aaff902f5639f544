#include <iostream>

#include "sumfree/cli.hpp"

int main(int argc, char** argv) { return sumfree::cli::run(argc, argv, std::cout, std::cerr); }
