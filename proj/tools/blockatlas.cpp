#include <iostream>

#include "blockatlas/cli/commands.hpp"

int main(int argc, char** argv) {
  return blockatlas::cli::run_cli(argc, argv, std::cout, std::cerr);
}
