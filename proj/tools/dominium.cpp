#include <iostream>
#include <string>
#include <vector>

#include "harness/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dominium::harness::run(args, std::cout, std::cerr);
}
