#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out;
  std::string err;
  const int code = hlf::run_cli(args, out, err);
  std::cout << out;
  std::cerr << err;
  return code;
}
