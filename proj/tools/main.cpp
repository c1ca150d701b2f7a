#include <iostream>
#include <string>
#include <vector>

#include "chordpower/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chordpower::cli::run(args, std::cout, std::cerr);
}
