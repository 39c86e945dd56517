#include <iostream>
#include <string>
#include <vector>

#include "ggd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ggd::run_cli(args, std::cout, std::cerr);
}
