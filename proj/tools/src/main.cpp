#include <cstdlib>
#include <iostream>

#include "fracgreen_cli/cli.hpp"

int main(int argc, char** argv) {
  return fracgreen::cli::run(argc, argv, std::cout, std::cerr, std::getenv("FRACGREEN_TOL"));
}
