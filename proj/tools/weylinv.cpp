#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "weylinv/cli.hpp"

int main(int argc, char** argv) {
  const char* env = std::getenv("WEYLINV_CACHE");
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = weylinv::cli::run(args, env ? env : "");
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
