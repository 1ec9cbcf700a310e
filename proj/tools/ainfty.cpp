#include <iostream>

#include "ainfty/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ainfty::run_cli(args, std::cout, std::cerr);
}
