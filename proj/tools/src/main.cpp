#include <iostream>

#include "eamod/cli/app.hpp"

int main(int argc, char** argv) { return eamod::cli::run(argc, argv, std::cout, std::cerr); }
