#include <iostream>
#include <string>
#include <vector>

#include "qschubert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qschubert::cli_main(args, std::cout, std::cerr);
}
