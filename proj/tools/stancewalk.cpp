#include "stancewalk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return stancewalk::cli::run(argc, argv, std::cout, std::cerr); }
