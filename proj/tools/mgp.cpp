#include <iostream>

#include "mgp/cli.hpp"

int main(int argc, char** argv) { return mgp::cli::run(argc, argv, std::cout, std::cerr); }
