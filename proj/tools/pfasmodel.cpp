#include <iostream>
#include <string>
#include <vector>

#include "pfas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pfas::run_cli(args, std::cout, std::cerr);
}
