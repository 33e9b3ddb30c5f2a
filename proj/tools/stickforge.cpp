#include <iostream>
#include <string>
#include <vector>

#include "stickforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stickforge::run_cli(args, std::cout, std::cerr);
}
