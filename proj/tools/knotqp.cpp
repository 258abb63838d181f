#include <iostream>

#include "knotqp/cli.hpp"

int main(int argc, char** argv) { return knotqp::run_cli(argc, argv, std::cout, std::cerr); }
