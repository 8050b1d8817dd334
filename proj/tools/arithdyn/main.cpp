#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return arithdyn::cli::run(argc, argv, std::cout, std::cerr); }
