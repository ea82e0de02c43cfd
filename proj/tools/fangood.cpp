#include <iostream>

#include "fangood/cli.hpp"

int main(int argc, char** argv) { return fangood::cli::run(argc, argv, std::cout, std::cerr); }
