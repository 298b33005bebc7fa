#include <iostream>

#include "hulthen/cli/commands.hpp"

int main(int argc, char** argv) {
  int code = 0;
  const auto config = hulthen::cli::parse_args(argc, argv, std::cout, std::cerr, code);
  if (!config) return code;
  return hulthen::cli::run(*config, std::cout, std::cerr);
}
