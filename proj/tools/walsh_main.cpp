#include <iostream>
#include <string>
#include <vector>

#include "walsh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return walsh::run_cli(args, std::cout, std::cerr);
}
