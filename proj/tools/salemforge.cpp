#include <iostream>
#include <string>
#include <vector>

#include "salemforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return salemforge::dispatch(args, std::cout, std::cerr);
}
