#include <iostream>

#include "nckc/cli.hpp"

int main(int argc, char** argv) { return nckc::cli::run(argc, argv, std::cout, std::cerr); }
