#include <iostream>

#include "citemetrics/cli.hpp"

int main(int argc, char** argv) {
  return citemetrics::run_cli(argc, argv, std::cout, std::cerr);
}
