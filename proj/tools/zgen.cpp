#include <iostream>
#include <string>
#include <vector>

#include "zgen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return zgen::cli::run(args, std::cout, std::cerr);
}
