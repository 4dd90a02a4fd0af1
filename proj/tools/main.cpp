#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = hybrid::cli::run_cli(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.code;
}
