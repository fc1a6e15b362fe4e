#include <iostream>
#include <vector>

#include "cogmap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cogmap::run_cli(args, std::cout, std::cerr);
}
