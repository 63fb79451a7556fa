#include <iostream>

#include "tdr/cli.hpp"

int main(int argc, char** argv) {
  const auto rep = tdr::cli::run({argv + 1, argv + argc});
  std::cout << rep.out;
  std::cerr << rep.err;
  return rep.exit_code;
}
