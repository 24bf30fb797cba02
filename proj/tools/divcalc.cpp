#include <iostream>

#include "divcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return divcalc::cli::run(args, std::cout, std::cerr);
}
