#include "pentafold/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return pentafold::cli::main_entry(argc, argv, std::cout, std::cerr);
}
