#include <iostream>

#include "virtgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vg::run_cli(args, std::cout, std::cerr);
}
