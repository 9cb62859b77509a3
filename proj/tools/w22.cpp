#include "w22/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto res = w22::run_cli(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
