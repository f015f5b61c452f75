#include <iostream>

#include "pbw/cli.hpp"

int main(int argc, char** argv) { return pbw::cli::run(argc, argv, std::cout, std::cerr); }
