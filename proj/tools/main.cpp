#include <iostream>

#include "cnchar/commands.hpp"

int main(int argc, char** argv) { return cnchar::run_cli(argc, argv, std::cout, std::cerr); }
