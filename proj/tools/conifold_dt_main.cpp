#include <iostream>
#include <string>
#include <vector>

#include "conifold_dt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return conifold_dt::cli::run(args, std::cout, std::cerr);
}
