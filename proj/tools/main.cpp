#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return svbound::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
