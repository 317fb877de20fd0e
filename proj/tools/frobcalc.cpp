#include <iostream>
#include <string>
#include <vector>

#include "frobcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frobcalc::dispatch(args, std::cin, std::cout, std::cerr);
}
