#include <iostream>
#include <vector>

#include "yb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return yb::cli::run(args, std::cout, std::cerr);
}
