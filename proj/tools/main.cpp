#include <iostream>

#include "rp2braid/cli.hpp"

int main(int argc, char** argv) { return rp2braid::cli::run(argc, argv, std::cout, std::cerr); }
