#include <iostream>

#include <partcolor/cli.hpp>

int main(int argc, char** argv) { return partcolor::cli::run(argc, argv, std::cout, std::cerr); }
