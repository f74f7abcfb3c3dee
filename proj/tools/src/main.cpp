#include <iostream>

#include "pdec_cli/commands.hpp"

int main(int argc, char** argv) { return pdec::cli::run(argc, argv, std::cout, std::cerr); }
