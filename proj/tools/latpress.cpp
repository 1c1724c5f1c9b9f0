#include <iostream>
#include <vector>

#include "latpress/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latpress::cli::run_main(args, std::cout, std::cerr);
}
