#include <iostream>
#include <string>
#include <vector>

#include "fekete_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fekete::cli::run(args, std::cout, std::cerr);
}
