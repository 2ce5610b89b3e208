#include <iostream>
#include <vector>

#include "rikit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rikit::cli_main(args, std::cout, std::cerr);
}
