#include <iostream>

#include "ghz/cli.hpp"

int main(int argc, char** argv) {
  return ghz::cli_main(argc, argv, std::cout, std::cerr);
}
