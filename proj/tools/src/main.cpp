#include <iostream>

#include "crnreal_cli/cli.hpp"

int main(int argc, char** argv) {
  return crnreal::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
