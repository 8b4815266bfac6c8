#include <iostream>
#include <string>
#include <vector>

#include "bsc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = bsc::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
