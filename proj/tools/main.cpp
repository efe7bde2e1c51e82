#include <iostream>

#include "pythsix/cli.hpp"

int main(int argc, char** argv) { return pythsix::cli::run(argc, argv, std::cout, std::cerr); }
