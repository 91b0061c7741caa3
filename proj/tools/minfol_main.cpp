#include <iostream>
#include <string>
#include <vector>

#include "minfol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return minfol::cli::run(args, std::cout, std::cerr);
}
