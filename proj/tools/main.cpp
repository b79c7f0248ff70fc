#include <iostream>
#include <string>
#include <vector>

#include "jnmf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return jnmf::cli::run(args, std::cout, std::cerr);
}
