#include <iostream>
#include <string>
#include <vector>

#include "hkmon/cli.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hkmon::cli::run(args, std::cout, std::cerr);
}
