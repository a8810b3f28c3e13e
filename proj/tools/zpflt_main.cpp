#include <iostream>

#include "zpflt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zpflt::cli::run(args, std::cout, std::cerr);
}
