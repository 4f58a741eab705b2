#include <iostream>
#include <string>
#include <vector>

#include "otl/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return otl::run_cli(args, std::cout, std::cerr);
}
