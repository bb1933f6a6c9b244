#include <iostream>

#include "discount/cli/commands.hpp"

int main(int argc, char** argv) { return discount::cli::run(argc, argv, std::cout, std::cerr); }
