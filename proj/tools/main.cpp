#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return cinder::cli::run(argc, argv, std::cout, std::cerr); }
