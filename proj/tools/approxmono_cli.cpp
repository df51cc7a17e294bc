#include <iostream>
#include <string>
#include <vector>

#include "approxmono/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return approxmono::cli::run(args, std::cout, std::cerr).exit_code;
}
