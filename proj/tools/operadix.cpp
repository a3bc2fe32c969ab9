#include "operadix/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return operadix::cli::run(argc, argv, std::cout, std::cerr); }
