#include <iostream>

#include "quartic_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quartic::cli::run(args, std::cout, std::cerr);
}
