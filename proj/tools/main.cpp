#include <iostream>
#include <string>
#include <vector>

#include "hypdrum/cli.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hypdrum::run(args, std::cout, std::cerr);
}
