#include "cohiggs/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return cohiggs::main_with_args(argc, argv, std::cout, std::cerr);
}
