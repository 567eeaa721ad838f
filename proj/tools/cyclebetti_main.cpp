#include <iostream>

#include "cyclebetti/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyclebetti::cli::run(args, std::cout, std::cerr);
}
