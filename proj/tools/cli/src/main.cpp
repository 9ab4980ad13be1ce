#include <iostream>

#include "seaweed_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seaweed::cli::run(args, std::cout, std::cerr);
}
