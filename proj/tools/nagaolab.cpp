#include <iostream>
#include <string>
#include <vector>

#include "nagaolab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nagaolab::cli::run(args, std::cin, std::cout, std::cerr);
}
