#include <iostream>

#include "pbwkit/cli/commands.hpp"

int main(int argc, char** argv) { return pbwkit::cli::run(argc, argv, std::cout, std::cerr); }
