#include <iostream>
#include <string>
#include <vector>

#include "pmc/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return pmc::run_cli(args, std::cin, std::cout, std::cerr);
}
