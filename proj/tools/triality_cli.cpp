#include "triality/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return triality::cli::run(argc, argv, std::cout, std::cerr); }
