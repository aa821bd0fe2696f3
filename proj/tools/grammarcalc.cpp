#include <iostream>
#include <string>
#include <vector>

#include "grammarcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grammarcalc::cli::run_command(args, std::cout, std::cerr);
}
