#include "cosmetic/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return cosmetic::run_cli(argc, argv, std::cout, std::cerr);
}
