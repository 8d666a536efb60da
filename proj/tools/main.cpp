#include <iostream>
#include <string>
#include <vector>

#include "tcover/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tcover::cli::run(args, std::cout, std::cerr);
}
