#include <iostream>
#include <string>
#include <vector>

#include "nucube/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nucube::run(args, std::cout, std::cerr);
}
