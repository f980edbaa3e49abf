#include <iostream>
#include <string>
#include <vector>

#include "degbell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return degbell::run_cli(args, std::cout, std::cerr);
}
