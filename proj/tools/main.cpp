#include <iostream>
#include <string>
#include <vector>

#include "setsys/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return setsys::cli::run(args, std::cout, std::cerr);
}
