#include <iostream>
#include <string>
#include <vector>

#include "mmdc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mmdc::cli::run(args, std::cout, std::cerr);
}
