#include <iostream>

#include "ecohome/cli.hpp"

int main(int argc, char** argv) {
  return ecohome::cli_main(argc, argv, std::cin, std::cout, std::cerr);
}
