#include <iostream>

#include "hyperarr/cli.hpp"

int main(int argc, char** argv) {
  const auto result = hyperarr::cli::run_command({argv + 1, argv + argc});
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
